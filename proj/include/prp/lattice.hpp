#pragma once

#include <vector>

#include "prp/moebius.hpp"

namespace prp {

/// Mean-field Ising measure on [n] with coupling J = beta/n,
/// mu(sigma) proportional to exp(J sum_{i<j} sigma_i sigma_j), identifying
/// spin -1 with 0.
struct CurieWeissSpec {
  int n;
  double beta;
  CurieWeissSpec(int n_, double beta_);
};

/// z_j = P(X([j]) == 0), computed from the constrained partition sums in
/// high precision. Throws if z_n underflows double (use the negativity
/// search for such n; it stays in extended precision throughout).
SymmetricZeroPattern curie_weiss_zero_pattern(const CurieWeissSpec& spec, int precision_bits);

struct NegativitySearch {
  bool found = false;
  int n = 0;
  int k = 0;
  double level = 0.0;
  std::vector<int> cancelled;  // n values skipped after cancellation failure
};

/// Scan n = 2..n_max for the first negative level of the inverted
/// Curie-Weiss measure. Parallel over n; the reported hit is the smallest n.
NegativitySearch curie_weiss_negativity_search(double beta, int n_max, int precision_bits,
                                               int threads);

enum class Verdict { not_in_R, inconclusive };

/// Tree-indexed chain with branching d >= 3: not representable when
/// r < 1/(1 - r_2^{(d)}). One-directional.
Verdict tree_mc_verdict(int d, double r);

/// Ising model on Z^d, d >= 2, coupling J > 0: not representable when
/// e^{2dJ}/(e^{2dJ} + e^{-2dJ}) <= 1/(1 - r_2^{(2d)}).
Verdict ising_verdict(int d, double J);

}  // namespace prp
