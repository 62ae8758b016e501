#pragma once

#include <cstdint>
#include <vector>

#include "prp/markov.hpp"

namespace prp {

/// Exact window sampler for a translation-invariant interval-supported
/// intensity on Z (truncated at the stored max length), plus optional extra
/// per-site singleton mass. Each (position, length) cell owns a counter-based
/// random stream, so draws are reproducible under any parallel fill order.
class WindowSampler {
 public:
  WindowSampler(IntervalNu nu, double singleton_extra, int window, std::uint64_t seed);

  int window() const { return window_; }
  const IntervalNu& nu() const { return nu_; }
  double singleton_extra() const { return extra_; }

  /// One window draw; bit i (0-based) is site i+1.
  std::vector<std::uint8_t> draw(std::uint64_t index) const;

  /// Counts of full window configurations over draws [first, first+count),
  /// merged deterministically. Requires window <= 20.
  std::vector<std::uint64_t> config_counts(std::uint64_t first, std::uint64_t count,
                                           int threads) const;

  /// Joint zero counts at sites 1 and 1+k over `count` draws.
  std::uint64_t pair_zero_count(int k, std::uint64_t first, std::uint64_t count,
                                int threads) const;

 private:
  std::uint64_t fill(std::uint64_t index) const;  // window bits in a u64

  IntervalNu nu_;
  double extra_;
  int window_;
  std::uint64_t seed_;
  // Flattened (position, length) cells: start offset per length.
  struct Cell {
    int a;        // interval start, may be <= 0
    int len;
    double prob;  // 1 - exp(-w_len)
  };
  std::vector<Cell> cells_;
};

/// Pushforward of the truncated interval measure onto a window [1, N]:
/// masses of equal window intersections accumulate (boundary stacking).
SubsetMeasure window_restrict(const IntervalNu& nu, double singleton_extra, int window);

struct PairCorrelationReport {
  int k = 0;
  std::uint64_t draws = 0;
  double empirical = 0.0;
  double analytic = 0.0;   // c_0^2 exp(sum_{l>k} (l-k) w_l) for the truncated measure
  double std_error = 0.0;
  double z_score = 0.0;
};

PairCorrelationReport pair_correlation_check(const IntervalNu& nu, double singleton_extra, int k,
                                             std::uint64_t draws, std::uint64_t seed, int threads);

struct DominationResult {
  bool dominates = true;
  int fails_at = 0;  // smallest failing box size
  double deficit = 0.0;
};

/// Checks nu(S_[n] union) >= -n log(1-p) for all boxes [1..n], n <= n_max.
DominationResult domination_check(const IntervalNu& nu, double singleton_extra, double p,
                                  int n_max);

}  // namespace prp
