#include "prp/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "prp/rng.hpp"

namespace prp {

WindowSampler::WindowSampler(IntervalNu nu, double singleton_extra, int window, std::uint64_t seed)
    : nu_(std::move(nu)), extra_(singleton_extra), window_(window), seed_(seed) {
  if (window_ < 1 || window_ > 63) throw std::invalid_argument("sampler window must be in [1,63]");
  if (extra_ < 0.0 || !std::isfinite(extra_))
    throw std::invalid_argument("singleton_extra must be nonnegative");
  const int L = nu_.max_len();
  for (int len = 1; len <= std::max(L, 1); ++len) {
    double w = nu_.w(len) + (len == 1 ? extra_ : 0.0);
    if (w <= 0.0) continue;
    const double prob = -std::expm1(-w);
    for (int a = 2 - len; a <= window_; ++a) cells_.push_back({a, len, prob});
  }
}

std::uint64_t WindowSampler::fill(std::uint64_t index) const {
  std::uint64_t bits = 0;
  for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
    const Cell& c = cells_[ci];
    // Stream identity is (position, length), counter is the draw index.
    std::uint64_t u = rng::prf(seed_, static_cast<std::uint64_t>(c.a + (1 << 20)),
                               static_cast<std::uint64_t>(c.len), index);
    if (rng::to_unit(u) < c.prob) {
      int lo = std::max(1, c.a);
      int hi = std::min(window_, c.a + c.len - 1);
      for (int s = lo; s <= hi; ++s) bits |= std::uint64_t{1} << (s - 1);
    }
  }
  return bits;
}

std::vector<std::uint8_t> WindowSampler::draw(std::uint64_t index) const {
  std::uint64_t bits = fill(index);
  std::vector<std::uint8_t> out(window_);
  for (int s = 0; s < window_; ++s) out[s] = (bits >> s) & 1u;
  return out;
}

std::vector<std::uint64_t> WindowSampler::config_counts(std::uint64_t first, std::uint64_t count,
                                                        int threads) const {
  if (window_ > 20) throw std::invalid_argument("config_counts requires window <= 20");
  const std::size_t cells = std::size_t{1} << window_;
  if (threads < 1) threads = 1;
  std::vector<std::vector<std::uint64_t>> partial(threads,
                                                  std::vector<std::uint64_t>(cells, 0));
  auto work = [&](int t) {
    auto& mine = partial[t];
    for (std::uint64_t i = t; i < count; i += threads) mine[fill(first + i)]++;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> total(cells, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < cells; ++i) total[i] += p[i];
  return total;
}

std::uint64_t WindowSampler::pair_zero_count(int k, std::uint64_t first, std::uint64_t count,
                                             int threads) const {
  if (k < 0 || k >= window_) throw std::invalid_argument("pair lag outside the window");
  const std::uint64_t mask = 1ull | (std::uint64_t{1} << k);
  if (threads < 1) threads = 1;
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](int t) {
    std::uint64_t acc = 0;
    for (std::uint64_t i = t; i < count; i += threads)
      if ((fill(first + i) & mask) == 0) ++acc;
    partial[t] = acc;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

SubsetMeasure window_restrict(const IntervalNu& nu, double singleton_extra, int window) {
  check_ground_set(window);
  SubsetMeasure out(window);
  for (int len = 1; len <= nu.max_len(); ++len) {
    double w = nu.w(len);
    if (w <= 0.0) continue;
    for (int a = 2 - len; a <= window; ++a) {
      int lo = std::max(1, a);
      int hi = std::min(window, a + len - 1);
      Mask m = 0;
      for (int s = lo; s <= hi; ++s) m |= Mask{1} << (s - 1);
      out.add_mass(m, w);
    }
  }
  if (singleton_extra > 0.0)
    for (int s = 1; s <= window; ++s) out.add_mass(Mask{1} << (s - 1), singleton_extra);
  return out;
}

PairCorrelationReport pair_correlation_check(const IntervalNu& nu, double singleton_extra, int k,
                                             std::uint64_t draws, std::uint64_t seed,
                                             int threads) {
  if (k < 1) throw std::invalid_argument("pair correlation needs k >= 1");
  PairCorrelationReport rep;
  rep.k = k;
  rep.draws = draws;

  const double site = nu.site_mass() + singleton_extra;
  double shared = 0.0;  // intersection mass of the two sites at distance k
  for (int len = k + 1; len <= nu.max_len(); ++len) shared += (len - k) * nu.w(len);
  const double c0 = std::exp(-site);
  rep.analytic = c0 * c0 * std::exp(shared);

  WindowSampler sampler(nu, singleton_extra, k + 1, seed);
  std::uint64_t hits = sampler.pair_zero_count(k, 0, draws, threads);
  rep.empirical = static_cast<double>(hits) / static_cast<double>(draws);
  rep.std_error = std::sqrt(rep.analytic * (1.0 - rep.analytic) / static_cast<double>(draws));
  rep.z_score = rep.std_error > 0.0 ? (rep.empirical - rep.analytic) / rep.std_error : 0.0;
  return rep;
}

DominationResult domination_check(const IntervalNu& nu, double singleton_extra, double p,
                                  int n_max) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("domination check needs p in (0,1)");
  if (n_max < 1) throw std::invalid_argument("domination check needs n_max >= 1");
  const double rate = -std::log1p(-p);
  for (int n = 1; n <= n_max; ++n) {
    double u = n * singleton_extra;
    for (int len = 1; len <= nu.max_len(); ++len) u += (n + len - 1) * nu.w(len);
    if (u < n * rate) return {false, n, n * rate - u};
  }
  return {true, 0, 0.0};
}

}  // namespace prp
