#pragma once

#include <vector>

#include "prp/measures.hpp"

namespace prp {

/// Positively associated two-state chain: rerandomize with probability p,
/// then land on 0 with probability r. Transition matrix
///   [ 1-p(1-r)   p(1-r) ]
///   [ pr         1-pr   ].
/// p = 1 (i.i.d. limit) is accepted for boundary testing.
struct MarkovParams {
  double p, r;
  MarkovParams(double p_, double r_);
};

/// Finitely supported renewal gap law b_1..b_L, summing to 1.
class GapDistribution {
 public:
  explicit GapDistribution(std::vector<double> b, double sum_tol = 1e-12);

  int truncation() const { return static_cast<int>(b_.size()); }
  double b(int k) const { return b_[k - 1]; }  // 1-based
  double mean() const { return mean_; }

 private:
  std::vector<double> b_;
  double mean_;
};

/// c_k = P(X_0 = 0, X_k = 0) for a stationary process, k = 0..K.
class CSequence {
 public:
  explicit CSequence(std::vector<double> c);

  int max_lag() const { return static_cast<int>(c_.size()) - 1; }
  double at(int k) const { return c_[k]; }
  const std::vector<double>& values() const { return c_; }

 private:
  std::vector<double> c_;
};

/// Translation-invariant measure on finite intervals of Z, one weight per
/// length (per position), truncated at length L.
class IntervalNu {
 public:
  explicit IntervalNu(std::vector<double> w);  // w[0] ignored, w[l] for length l

  int max_len() const { return static_cast<int>(w_.size()) - 1; }
  double w(int len) const { return (len >= 1 && len <= max_len()) ? w_[len] : 0.0; }

  /// Mass of intervals covering one fixed site, sum_l l * w_l.
  double site_mass() const;

 private:
  std::vector<double> w_;
};

CSequence c_from_markov(const MarkovParams& mp, int max_lag);

/// Stationary renewal pair probabilities: c_0 = 1/mu, c_k = c_0 * u_k with
/// the renewal recursion u_k = sum_j b_j u_{k-j}.
CSequence c_from_gaps(const GapDistribution& g, int max_lag);

struct ConvexityResult {
  bool pass = true;
  int k = 0;  // smallest violating lag on failure
};

/// Log-convexity c_{k-1} c_{k+1} >= c_k^2; the exact membership criterion
/// for renewal processes.
ConvexityResult convexity_check(const CSequence& c);

/// w_l = log(c_{l-1} c_{l+1} / c_l^2) for l = 1..L. Throws
/// not_representable_error when the convexity criterion fails.
IntervalNu interval_nu(const CSequence& c, int max_len);

struct TelescopingResult {
  double sum_side = 0.0;  // sum_{j=k+1}^m (j-k) w_j
  double log_side = 0.0;  // log c_k - log c_m + (m-k) log(c_{m+1}/c_m)
  double diff = 0.0;
};

TelescopingResult telescoping_check(const CSequence& c, int k, int m);

/// Exact zero pattern of the stationary chain on a window of length n,
/// via the transfer matrix restricted to the required zero set.
ZeroPattern markov_window_law(const MarkovParams& mp, int n);

}  // namespace prp
