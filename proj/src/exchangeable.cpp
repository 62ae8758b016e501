#include "prp/exchangeable.hpp"

#include <cmath>
#include <stdexcept>

#include "prp/rng.hpp"

namespace prp {

double sigma_density(const SigmaDensity& d, double x) {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  switch (d.kind) {
    case SigmaKind::none:
      return 0.0;
    case SigmaKind::lebesgue:
      return 1.0;
    case SigmaKind::ex_uniform:
      return 1.0 / (-std::log1p(-x));
    case SigmaKind::beta:
      return std::pow(1.0 - x, d.b - 1.0) * (1.0 - std::pow(1.0 - x, d.a)) /
             (-x * std::log1p(-x));
  }
  return 0.0;
}

double levy_density(const LevyDensity& d, double s) {
  if (!(s > 0.0)) return 0.0;
  switch (d.kind) {
    case LevyKind::none:
      return 0.0;
    case LevyKind::exp_decay:
      return std::exp(-s);
    case LevyKind::exp_over_s:
      return std::exp(-s) / s;
    case LevyKind::beta_levy:
      return std::exp(-d.b * s) * (-std::expm1(-d.a * s)) / (s * (-std::expm1(-s)));
  }
  return 0.0;
}

void ExchangeableNu::validate() const {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("exchangeable nu: singleton mass must be finite, >= 0");
  if (!(full_set >= 0.0) || !std::isfinite(full_set))
    throw std::invalid_argument("exchangeable nu: full-set mass must be finite, >= 0");
  for (const auto& [x, m] : atoms) {
    if (!(x > 0.0 && x <= 1.0))
      throw std::invalid_argument("exchangeable nu: atom positions must lie in (0,1]");
    if (!(m >= 0.0) || !std::isfinite(m))
      throw std::invalid_argument("exchangeable nu: atom masses must be finite, >= 0");
  }
  if (density.kind == SigmaKind::beta && !(density.a > 0.0 && density.b > 0.0))
    throw std::invalid_argument("exchangeable nu: beta density needs a, b > 0");
  double xi = sigma_x_integral();
  if (!std::isfinite(xi))
    throw std::invalid_argument("exchangeable nu: integral of x over sigma is not finite");
}

double ExchangeableNu::sigma_x_integral() const {
  double total = 0.0;
  for (const auto& [x, m] : atoms) total += x * m;
  if (density.kind != SigmaKind::none) {
    auto f = [this](double x) { return x * sigma_density(density, x); };
    total += integrate(f, 1e-12, 1.0 - 1e-9, 1e-9).value;
  }
  return total;
}

void LevyTriple::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("levy triple: drift must be finite, >= 0");
  if (!(mass_at_infinity >= 0.0 && mass_at_infinity < 1.0))
    throw std::invalid_argument("levy triple: mass at infinity must lie in [0,1)");
  for (const auto& [s, m] : atoms) {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("levy triple: atom positions must be positive");
    if (!(m >= 0.0) || !std::isfinite(m))
      throw std::invalid_argument("levy triple: atom masses must be finite, >= 0");
  }
  if (density.kind == LevyKind::beta_levy && !(density.a > 0.0 && density.b > 0.0))
    throw std::invalid_argument("levy triple: beta levy density needs a, b > 0");
  if (density.kind != LevyKind::none) {
    // sigma-hat must integrate s near 0 and have finite mass away from 0
    auto near = integrate([this](double s) { return s * levy_density(density, s); }, 1e-12, 1.0,
                          1e-9);
    auto far = integrate([this](double s) { return levy_density(density, s); }, 1.0, 200.0, 1e-9);
    if (!std::isfinite(near.value) || !std::isfinite(far.value))
      throw std::invalid_argument("levy triple: levy measure integrability check failed");
  }
}

LevyTriple levy_from_exchangeable(const ExchangeableNu& en) {
  en.validate();
  LevyTriple lt;
  lt.gamma = en.c;
  double full = en.full_set;
  for (const auto& [x, m] : en.atoms) {
    if (x == 1.0) {
      full += m;  // Pi_1 is the full-set atom; it maps to Z = infinity
    } else {
      lt.atoms.emplace_back(-std::log1p(-x), m);
    }
  }
  lt.mass_at_infinity = -std::expm1(-full);
  switch (en.density.kind) {
    case SigmaKind::none:
      break;
    case SigmaKind::lebesgue:
      lt.density.kind = LevyKind::exp_decay;
      break;
    case SigmaKind::ex_uniform:
      lt.density.kind = LevyKind::exp_over_s;
      break;
    case SigmaKind::beta:
      lt.density = {LevyKind::beta_levy, en.density.a, en.density.b};
      break;
  }
  lt.validate();
  return lt;
}

ExchangeableNu exchangeable_from_levy(const LevyTriple& lt) {
  lt.validate();
  ExchangeableNu en;
  en.c = lt.gamma;
  en.full_set = lt.mass_at_infinity > 0.0 ? -std::log1p(-lt.mass_at_infinity) : 0.0;
  for (const auto& [s, m] : lt.atoms) en.atoms.emplace_back(-std::expm1(-s), m);
  switch (lt.density.kind) {
    case LevyKind::none:
      break;
    case LevyKind::exp_decay:
      en.density.kind = SigmaKind::lebesgue;
      break;
    case LevyKind::exp_over_s:
      en.density.kind = SigmaKind::ex_uniform;
      break;
    case LevyKind::beta_levy:
      en.density = {SigmaKind::beta, lt.density.a, lt.density.b};
      break;
  }
  en.validate();
  return en;
}

// --- sampler ------------------------------------------------------------------

DefinettiSampler::DefinettiSampler(const ExchangeableNu& en, double trunc_eps) : en_(en) {
  en_.validate();
  if (!(trunc_eps > 0.0 && trunc_eps < 0.5))
    throw std::invalid_argument("sampler: trunc_eps must lie in (0, 0.5)");
  eps_ = trunc_eps;
  if (en_.density.kind == SigmaKind::none) return;

  // Shrink the cutoff until the neglected multiplicative bias is within
  // trunc_eps: integral of x over sigma below the cutoff stays < trunc_eps.
  auto bias = [this](double cut) {
    return integrate([this](double x) { return x * sigma_density(en_.density, x); }, 1e-14, cut,
                     1e-12 * eps_)
        .value;
  };
  int guard = 0;
  while (bias(eps_) >= trunc_eps) {
    eps_ *= 0.5;
    if (++guard > 60)
      throw std::invalid_argument("sampler: could not satisfy the truncation criterion");
  }

  // Piecewise CDF table for the truncated density, log-spaced toward both
  // endpoints where the built-in families concentrate or vanish.
  const int half = 2048;
  grid_.push_back(eps_);
  if (eps_ < 0.5) {
    const double lo = std::log(eps_), hi = std::log(0.5);
    for (int i = 1; i <= half; ++i) grid_.push_back(std::exp(lo + (hi - lo) * i / half));
  }
  const double tail = 1e-12;
  if (grid_.back() < 1.0 - tail) {
    const double lo = std::log(1.0 - grid_.back()), hi = std::log(tail);
    for (int i = 1; i <= half; ++i) grid_.push_back(1.0 - std::exp(lo + (hi - lo) * i / half));
  }
  cdf_.assign(grid_.size(), 0.0);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    double a = grid_[i - 1], b = grid_[i];
    double fa = sigma_density(en_.density, a);
    double fm = sigma_density(en_.density, 0.5 * (a + b));
    double fb = sigma_density(en_.density, b);
    cdf_[i] = cdf_[i - 1] + (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  density_mass_ = cdf_.back();
}

double DefinettiSampler::draw(std::uint64_t seed, std::uint64_t index) const {
  // Role ids partition the counter space: 0 full-set atom, 1+i sigma atoms,
  // high range the density points.
  if (en_.full_set > 0.0) {
    rng::Stream st{seed, index, 0};
    if (st.next_unit() < -std::expm1(-en_.full_set)) return 1.0;
  }
  double log_prod = -en_.c;
  for (std::size_t i = 0; i < en_.atoms.size(); ++i) {
    const auto& [x, m] = en_.atoms[i];
    rng::Stream st{seed, index, 1 + i};
    int k = st.poisson(m);
    if (k > 0) log_prod += k * std::log1p(-x);
  }
  if (density_mass_ > 0.0) {
    rng::Stream st{seed, index, 1u << 20};
    int npts = st.poisson(density_mass_);
    for (int j = 0; j < npts; ++j) {
      double target = st.next_unit() * density_mass_;
      std::size_t lo = 0, hi = cdf_.size() - 1;
      while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        (cdf_[mid] <= target ? lo : hi) = mid;
      }
      double seg = cdf_[hi] - cdf_[lo];
      double frac = seg > 0.0 ? (target - cdf_[lo]) / seg : 0.5;
      double y = grid_[lo] + frac * (grid_[hi] - grid_[lo]);
      log_prod += std::log1p(-y);
    }
  }
  return -std::expm1(log_prod);
}

double sample_definetti_Q(const ExchangeableNu& en, std::uint64_t seed, double trunc_eps) {
  return DefinettiSampler(en, trunc_eps).draw(seed, 0);
}

double laplace_of_Z(const ExchangeableNu& en, double t, double* quad_error) {
  en.validate();
  if (t < 0.0) throw std::invalid_argument("laplace_of_Z needs t >= 0");
  if (quad_error) *quad_error = 0.0;
  if (t == 0.0) return 1.0;  // (1-y)^0 - 1 = 0 convention
  double exponent = -en.full_set - en.c * t;
  for (const auto& [x, m] : en.atoms) exponent += m * (std::pow(1.0 - x, t) - 1.0);
  if (en.density.kind != SigmaKind::none) {
    auto f = [&en, t](double y) {
      return (std::pow(1.0 - y, t) - 1.0) * sigma_density(en.density, y);
    };
    QuadResult q = integrate(f, 1e-12, 1.0 - 1e-12, 1e-10);
    exponent += q.value;
    if (quad_error) *quad_error = q.error;
  }
  return std::exp(exponent);
}

}  // namespace prp
