#include "prp/mixtures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "prp/polylog.hpp"

namespace prp {

MixtureSpec::MixtureSpec(double q_, std::vector<double> x_, std::vector<double> alpha_)
    : q(q_), x(std::move(x_)), alpha(std::move(alpha_)) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("mixture: need q in (0,1]");
  if (x.empty() || x.size() != alpha.size())
    throw std::invalid_argument("mixture: x and alpha must be nonempty and equally sized");
  if (x[0] != 1.0) throw std::invalid_argument("mixture: x_1 must equal 1");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] < x[i - 1])) throw std::invalid_argument("mixture: x must be strictly decreasing");
  if (x.back() < 0.0) throw std::invalid_argument("mixture: x_m must be >= 0");
  double total = 0.0;
  for (double a : alpha) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("mixture: alpha_i must be in (0,1)");
    total += a;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixture: alpha must sum to 1");
}

SymmetricZeroPattern MixtureSpec::zero_pattern(int n) const {
  std::vector<double> z(n + 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double pow = 1.0;
    for (int j = 0; j <= n; ++j) {
      z[j] += alpha[i] * pow;
      pow *= q * x[i];
    }
  }
  return SymmetricZeroPattern(n, std::move(z));
}

LevelMeasure mixture_levels(const MixtureSpec& spec, int n, int precision_bits) {
  if (n < 2) throw std::invalid_argument("mixture_levels needs n >= 2");
  const int m = spec.m();
  // Kernel input: log S_i with S_i = sum_j alpha_j x_j^i (q-free). The kernel
  // then yields the q-free levels; only the singleton level sees q.
  auto log_s_at = [&spec, n, m](int prec) {
    std::vector<Real> s(n + 1, Real(prec));
    for (int i = 0; i < m; ++i) {
      Real a(spec.alpha[i], prec);
      Real xi(spec.x[i], prec);
      Real pow(1.0, prec);
      for (int j = 0; j <= n; ++j) {
        s[j] += a * pow;
        pow *= xi;
      }
    }
    for (Real& v : s) v = log(v);
    return s;
  };
  std::vector<double> lambda = escalate_levels(log_s_at, precision_bits);
  lambda[1] -= std::log(spec.q);
  // Guaranteed by Cauchy-Schwarz on the level formulas; treat a violation as
  // an internal numerical defect rather than a verdict.
  if (lambda[1] < -std::log(spec.q) - 1e-9)
    throw std::logic_error("mixture_levels: singleton level fell below -log q");
  if (n >= 2 && lambda[2] < -1e-9)
    throw std::logic_error("mixture_levels: pair level fell below zero");
  return LevelMeasure(n, std::move(lambda));
}

SignNearOne sign_near_one(int k, double alpha1, double tol) {
  if (k < 3) throw std::invalid_argument("sign_near_one needs k >= 3");
  if (!(alpha1 > 0.0 && alpha1 < 1.0))
    throw std::invalid_argument("sign_near_one needs alpha1 in (0,1)");
  const double arg = -(1.0 - alpha1) / alpha1;
  const double v = PolylogRational::neg_order(k)(arg);
  if (std::fabs(v) < tol) return SignNearOne::boundary;
  return v < 0.0 ? SignNearOne::positive : SignNearOne::negative;
}

ThresholdClass threshold_classify(int n, double alpha1) {
  if (n < 3) throw std::invalid_argument("threshold_classify needs n >= 3");
  const double threshold = root_r2(n).threshold;
  // The theorem keeps the boundary point representable; allow the computed
  // threshold a 1e-9 band so exact-boundary inputs land there.
  return alpha1 >= threshold - 1e-9 ? ThresholdClass::representable_near_one
                                    : ThresholdClass::not_representable_near_one;
}

std::vector<PhaseCell> phase_scan(int n, const std::vector<double>& alphas,
                                  const std::vector<double>& x2s, double q, int precision_bits,
                                  int threads) {
  if (n < 3 || n > 12) throw std::invalid_argument("phase_scan supports 3 <= n <= 12");
  if (alphas.size() > 2000 || x2s.size() > 2000)
    throw std::invalid_argument("phase_scan grid is capped at 2000 per axis");
  const int levels_per_cell = n - 2;  // k = 3..n
  std::vector<PhaseCell> out(alphas.size() * x2s.size() * levels_per_cell);

  auto run_alpha = [&](std::size_t ai) {
    for (std::size_t xi = 0; xi < x2s.size(); ++xi) {
      const std::size_t base = (ai * x2s.size() + xi) * levels_per_cell;
      bool failed = false;
      std::vector<double> lambda;
      try {
        MixtureSpec spec(q, {1.0, x2s[xi]}, {alphas[ai], 1.0 - alphas[ai]});
        lambda = mixture_levels(spec, n, precision_bits).levels();
      } catch (const cancellation_failure&) {
        failed = true;
      }
      for (int k = 3; k <= n; ++k) {
        PhaseCell& cell = out[base + (k - 3)];
        cell.alpha1 = alphas[ai];
        cell.x2 = x2s[xi];
        cell.k = k;
        if (failed) {
          cell.unresolved = true;
          continue;
        }
        cell.level = lambda[k];
        if (std::fabs(cell.level) <= 1e-9)
          cell.unresolved = true;
        else
          cell.sign = cell.level > 0.0 ? 1 : -1;
      }
    }
  };

  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(alphas.size()));
  if (threads <= 1) {
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) run_alpha(ai);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t ai = t; ai < alphas.size(); ai += threads) run_alpha(ai);
      });
    }
    for (auto& th : pool) th.join();
  }
  return out;
}

bool exchangeable_mixture_in_R(int m, const std::vector<double>& p,
                               const std::vector<double>& alpha) {
  if (m < 2) throw std::invalid_argument("exchangeable mixture verdict needs m >= 2");
  if (p.size() != static_cast<std::size_t>(m) || alpha.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("exchangeable mixture verdict needs m densities and weights");
  if (!(p.front() >= 0.0 && p.back() <= 1.0))
    throw std::invalid_argument("densities must lie in [0,1]");
  for (int i = 1; i < m; ++i)
    if (!(p[i] > p[i - 1])) throw std::invalid_argument("densities must be strictly increasing");
  double total = 0.0;
  for (double a : alpha) {
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("weights must be in (0,1)");
    total += a;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
  return m == 2 && p.back() >= 1.0 - 1e-12;
}

}  // namespace prp
