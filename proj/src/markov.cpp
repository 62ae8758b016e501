#include "prp/markov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace prp {

MarkovParams::MarkovParams(double p_, double r_) : p(p_), r(r_) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("markov: need p in (0,1]");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("markov: need r in (0,1)");
}

GapDistribution::GapDistribution(std::vector<double> b, double sum_tol) : b_(std::move(b)) {
  if (b_.empty()) throw std::invalid_argument("gap law must be nonempty");
  double total = 0.0;
  mean_ = 0.0;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (b_[i] < 0.0 || !std::isfinite(b_[i]))
      throw std::invalid_argument("gap law entries must be nonnegative");
    total += b_[i];
    mean_ += static_cast<double>(i + 1) * b_[i];
  }
  if (std::fabs(total - 1.0) > sum_tol)
    throw std::invalid_argument("gap law mass is " + std::to_string(total) +
                                ", not 1 (pre-truncate and renormalize, or report the tail)");
}

CSequence::CSequence(std::vector<double> c) : c_(std::move(c)) {
  if (c_.size() < 1) throw std::invalid_argument("c-sequence must be nonempty");
  if (!(c_[0] > 0.0)) throw std::invalid_argument("c-sequence needs c_0 > 0");
  for (double v : c_)
    if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("c-sequence entries must be in (0,1]");
}

IntervalNu::IntervalNu(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) w_.push_back(0.0);
  w_[0] = 0.0;
  for (double v : w_)
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("interval weights must be nonnegative");
}

double IntervalNu::site_mass() const {
  double s = 0.0;
  for (int len = 1; len <= max_len(); ++len) s += len * w_[len];
  return s;
}

CSequence c_from_markov(const MarkovParams& mp, int max_lag) {
  if (max_lag < 2) throw std::invalid_argument("c_from_markov needs max_lag >= 2");
  std::vector<double> c(max_lag + 1);
  double decay = 1.0;  // (1-p)^k
  for (int k = 0; k <= max_lag; ++k) {
    c[k] = mp.r * decay + mp.r * mp.r * (1.0 - decay);
    decay *= 1.0 - mp.p;
  }
  return CSequence(std::move(c));
}

CSequence c_from_gaps(const GapDistribution& g, int max_lag) {
  if (max_lag < 0) throw std::invalid_argument("c_from_gaps needs max_lag >= 0");
  const int L = g.truncation();
  std::vector<double> u(max_lag + 1, 0.0);
  u[0] = 1.0;
  for (int k = 1; k <= max_lag; ++k) {
    double s = 0.0;
    for (int j = 1; j <= std::min(k, L); ++j) s += g.b(j) * u[k - j];
    u[k] = s;
  }
  const double c0 = 1.0 / g.mean();
  std::vector<double> c(max_lag + 1);
  for (int k = 0; k <= max_lag; ++k) c[k] = c0 * u[k];
  return CSequence(std::move(c));
}

ConvexityResult convexity_check(const CSequence& c) {
  if (c.max_lag() < 2) throw std::invalid_argument("convexity check needs lags up to 2");
  for (int k = 1; k + 1 <= c.max_lag(); ++k) {
    if (c.at(k - 1) * c.at(k + 1) < c.at(k) * c.at(k) - 1e-12)
      return {false, k};
  }
  return {true, 0};
}

IntervalNu interval_nu(const CSequence& c, int max_len) {
  if (max_len < 1) throw std::invalid_argument("interval_nu needs max_len >= 1");
  if (c.max_lag() < max_len + 1)
    throw std::invalid_argument("interval_nu needs the c-sequence up to lag max_len + 1");
  ConvexityResult conv = convexity_check(c);
  if (!conv.pass)
    throw not_representable_error("not representable: log-convexity fails at lag " +
                                  std::to_string(conv.k));
  std::vector<double> w(max_len + 1, 0.0);
  for (int len = 1; len <= max_len; ++len) {
    double v = std::log(c.at(len - 1) * c.at(len + 1) / (c.at(len) * c.at(len)));
    w[len] = v < 0.0 ? 0.0 : v;  // convexity passed; clamp roundoff
  }
  return IntervalNu(std::move(w));
}

TelescopingResult telescoping_check(const CSequence& c, int k, int m) {
  if (k < 0 || m < k + 1) throw std::invalid_argument("telescoping_check needs 0 <= k < m");
  if (c.max_lag() < m + 1)
    throw std::invalid_argument("telescoping_check needs the c-sequence up to lag m + 1");
  TelescopingResult r;
  for (int j = k + 1; j <= m; ++j)
    r.sum_side +=
        (j - k) * std::log(c.at(j - 1) * c.at(j + 1) / (c.at(j) * c.at(j)));
  r.log_side = std::log(c.at(k)) - std::log(c.at(m)) +
               (m - k) * std::log(c.at(m + 1) / c.at(m));
  r.diff = r.sum_side - r.log_side;
  return r;
}

ZeroPattern markov_window_law(const MarkovParams& mp, int n) {
  if (n < 2) throw std::invalid_argument("markov_window_law needs n >= 2");
  check_ground_set(n);
  const double p00 = 1.0 - mp.p * (1.0 - mp.r);
  const double p01 = mp.p * (1.0 - mp.r);
  const double p10 = mp.p * mp.r;
  const double p11 = 1.0 - mp.p * mp.r;
  const double pi0 = mp.r, pi1 = 1.0 - mp.r;
  const Mask top = full_mask(n);
  std::vector<double> z(std::size_t{1} << n);
  z[0] = 1.0;
  for (Mask I = 1; I <= top; ++I) {
    double v0 = pi0;
    double v1 = (I & 1u) ? 0.0 : pi1;
    for (int s = 1; s < n; ++s) {
      double n0 = v0 * p00 + v1 * p10;
      double n1 = (I >> s & 1u) ? 0.0 : v0 * p01 + v1 * p11;
      v0 = n0;
      v1 = n1;
    }
    z[I] = v0 + v1;
  }
  return ZeroPattern(n, std::move(z));
}

}  // namespace prp
