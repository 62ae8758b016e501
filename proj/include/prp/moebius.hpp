#pragma once

#include <functional>
#include <vector>

#include "prp/measures.hpp"
#include "prp/real.hpp"

namespace prp {

/// Unique signed measure with forward zero pattern z:
/// nu(K) = sum_{I subset of K} (-1)^{|K|-|I|} log z([n] \ I).
/// Atoms below 1e-14 in absolute value are dropped from the sparse result.
SignedSubsetMeasure invert(const ZeroPattern& z);

struct RepresentabilityResult {
  bool representable = false;
  Mask witness = 0;     // most negative atom when not representable
  double mass = 0.0;    // its mass
};

/// Sign test on the inverted measure: representable iff every atom >= -tol.
RepresentabilityResult is_representable(const ZeroPattern& z, double tol);

/// Cardinality-indexed zero probabilities z_j = P(X([j]) == 0) of a
/// permutation-invariant law.
class SymmetricZeroPattern {
 public:
  SymmetricZeroPattern(int n, std::vector<double> z, const Tolerances& tol = {});

  int n() const { return n_; }
  double at(int j) const { return z_[j]; }
  const std::vector<double>& values() const { return z_; }

  /// Expand to the full 2^n pattern, z(I) = z_{|I|}.
  ZeroPattern expand() const;

 private:
  int n_;
  std::vector<double> z_;
};

/// Permutation-invariant measure summarized by one mass per cardinality:
/// nu(K) = lambda_{|K|}.
class LevelMeasure {
 public:
  LevelMeasure(int n, std::vector<double> lambda);

  int n() const { return n_; }
  double level(int ell) const { return lambda_[ell]; }
  const std::vector<double>& levels() const { return lambda_; }

  bool representable(double tol) const;
  /// Most negative level; ties toward the smallest cardinality.
  std::pair<int, double> most_negative() const;

 private:
  int n_;
  std::vector<double> lambda_;  // index 0 unused
};

/// Alternating-sum kernel: given log z_0..log z_n at working precision,
/// lambda_ell = sum_{j=0}^{ell} (-1)^{ell-j} C(ell,j) log z_{n-j}.
/// Returned vector has index 0 unused.
std::vector<double> alternating_levels(const std::vector<Real>& log_z);

/// Evaluate `log_z_at(prec) -> log z vector` at doubling precisions until two
/// consecutive level vectors agree to 1e-12 (relative above magnitude 1).
/// Throws cancellation_failure past the ceiling.
std::vector<double> escalate_levels(const std::function<std::vector<Real>(int)>& log_z_at,
                                    int start_bits, int ceiling_bits = kPrecisionCeiling);

/// High-precision inversion on the symmetric fast path.
LevelMeasure symmetric_invert(const SymmetricZeroPattern& z, int precision_bits);

}  // namespace prp
