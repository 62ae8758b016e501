#pragma once

#include <vector>

#include "prp/moebius.hpp"

namespace prp {

/// Mixture of product measures sum_i alpha_i Pi_{1 - q x_i} with
/// 1 = x_1 > x_2 > ... > x_m >= 0 and q in (0,1].
struct MixtureSpec {
  double q;
  std::vector<double> x;
  std::vector<double> alpha;

  MixtureSpec(double q_, std::vector<double> x_, std::vector<double> alpha_);
  int m() const { return static_cast<int>(x.size()); }

  /// P(X([j]) == 0) = sum_i alpha_i (q x_i)^j.
  SymmetricZeroPattern zero_pattern(int n) const;
};

/// Signed level measure of the mixture restricted to [n]:
///   lambda_1 = -log q + log(sum alpha_i x_i^{n-1} / sum alpha_i x_i^n),
///   lambda_l = sum_{j=0}^{l} (-1)^{l-j} C(l,j) log sum_i alpha_i x_i^{n-j}, l >= 2
/// (the q-free form; q only enters the singleton level).
LevelMeasure mixture_levels(const MixtureSpec& spec, int n, int precision_bits);

enum class SignNearOne { positive, negative, boundary };

/// Sign of nu_n([k]) as x_2 -> 1 for a two-component mixture:
/// the opposite of the sign of Li_{1-k}(-(1-alpha1)/alpha1).
SignNearOne sign_near_one(int k, double alpha1, double tol = 1e-12);

enum class ThresholdClass { representable_near_one, not_representable_near_one };

/// Membership verdict as x_2 -> 1: representable iff alpha1 >= 1/(1 - r_2^{(n)}).
/// Equality (within 1e-9 of the computed threshold) counts as representable.
ThresholdClass threshold_classify(int n, double alpha1);

struct PhaseCell {
  double alpha1 = 0.0;
  double x2 = 0.0;
  int k = 0;
  double level = 0.0;
  int sign = 0;            // +1 / -1; 0 when unresolved
  bool unresolved = false; // |level| <= 1e-9 or cancellation failure
};

/// Signs of nu_n([k]) for k = 3..n over an (alpha1, x2) grid. Rows are emitted
/// in row-major (alpha outer, x2 inner, k innermost) order regardless of the
/// worker count.
std::vector<PhaseCell> phase_scan(int n, const std::vector<double>& alphas,
                                  const std::vector<double>& x2s, double q, int precision_bits,
                                  int threads);

/// Infinite-exchangeable verdict for sum alpha_i Pi_{p_i}: in R iff m = 2 and
/// p_m = 1.
bool exchangeable_mixture_in_R(int m, const std::vector<double>& p,
                               const std::vector<double>& alpha);

}  // namespace prp
