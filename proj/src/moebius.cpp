#include "prp/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace prp {

SignedSubsetMeasure invert(const ZeroPattern& z) {
  const int n = z.n();
  const Mask top = full_mask(n);
  std::vector<double> f(std::size_t{1} << n);
  for (Mask I = 0; I <= top; ++I) f[I] = std::log(z.at(top & ~I));
  // Subset Mobius transform: f[K] <- sum_{I subset of K} (-1)^{|K|-|I|} f[I].
  for (int b = 0; b < n; ++b) {
    const Mask bit = Mask{1} << b;
    for (Mask s = 0; s <= top; ++s)
      if (s & bit) f[s] -= f[s ^ bit];
  }
  SignedSubsetMeasure nu(n);
  for (Mask k = 1; k <= top; ++k)
    if (std::fabs(f[k]) > 1e-14) nu.set_mass(k, f[k]);
  return nu;
}

RepresentabilityResult is_representable(const ZeroPattern& z, double tol) {
  SignedSubsetMeasure nu = invert(z);
  auto [where, mass] = nu.most_negative();
  RepresentabilityResult r;
  if (mass >= -tol) {
    r.representable = true;
  } else {
    r.witness = where;
    r.mass = mass;
  }
  return r;
}

// --- SymmetricZeroPattern / LevelMeasure -------------------------------------

SymmetricZeroPattern::SymmetricZeroPattern(int n, std::vector<double> z, const Tolerances& tol)
    : n_(n) {
  if (n < 1) throw std::invalid_argument("symmetric pattern needs n >= 1");
  if (z.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("symmetric pattern needs n+1 entries z_0..z_n");
  if (std::fabs(z[0] - 1.0) > tol.eq)
    throw std::invalid_argument("symmetric pattern needs z_0 = 1");
  z[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    if (!(z[j] > 0.0)) throw std::invalid_argument("symmetric pattern must stay positive");
    if (z[j] > z[j - 1] + tol.eq)
      throw std::invalid_argument("symmetric pattern must be decreasing");
  }
  z_ = std::move(z);
}

ZeroPattern SymmetricZeroPattern::expand() const {
  const Mask top = full_mask(n_);
  std::vector<double> full(std::size_t{1} << n_);
  for (Mask I = 0; I <= top; ++I) full[I] = z_[set_size(I)];
  return ZeroPattern(n_, std::move(full));
}

LevelMeasure::LevelMeasure(int n, std::vector<double> lambda) : n_(n), lambda_(std::move(lambda)) {
  if (n < 1) throw std::invalid_argument("level measure needs n >= 1");
  if (lambda_.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("level measure needs entries lambda_0..lambda_n (index 0 unused)");
  lambda_[0] = 0.0;
}

bool LevelMeasure::representable(double tol) const {
  for (int ell = 1; ell <= n_; ++ell)
    if (lambda_[ell] < -tol) return false;
  return true;
}

std::pair<int, double> LevelMeasure::most_negative() const {
  int where = 1;
  double best = lambda_[1];
  for (int ell = 2; ell <= n_; ++ell)
    if (lambda_[ell] < best) {
      best = lambda_[ell];
      where = ell;
    }
  return {where, best};
}

// --- alternating-sum kernel ---------------------------------------------------

std::vector<double> alternating_levels(const std::vector<Real>& log_z) {
  const int n = static_cast<int>(log_z.size()) - 1;
  if (n < 1) throw std::invalid_argument("alternating_levels needs log z_0..z_n");
  int prec = 64;
  for (const Real& v : log_z) prec = std::max(prec, v.prec());

  std::vector<double> lambda(n + 1, 0.0);
  mpz_t binom;
  mpz_init(binom);
  for (int ell = 1; ell <= n; ++ell) {
    Real acc(prec);
    mpz_set_ui(binom, 1);  // C(ell, 0)
    for (int j = 0; j <= ell; ++j) {
      Real term = log_z[n - j];
      term.mul_mpz(binom);
      if ((ell - j) & 1)
        acc -= term;
      else
        acc += term;
      // C(ell, j+1) = C(ell, j) * (ell-j) / (j+1), exact in integers
      if (j < ell) {
        mpz_mul_ui(binom, binom, static_cast<unsigned long>(ell - j));
        mpz_divexact_ui(binom, binom, static_cast<unsigned long>(j + 1));
      }
    }
    lambda[ell] = acc.to_double();
  }
  mpz_clear(binom);
  return lambda;
}

namespace {

bool levels_agree(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({1.0, std::fabs(a[i]), std::fabs(b[i])});
    if (std::fabs(a[i] - b[i]) > 1e-12 * scale) return false;
  }
  return true;
}

}  // namespace

std::vector<double> escalate_levels(const std::function<std::vector<Real>(int)>& log_z_at,
                                    int start_bits, int ceiling_bits) {
  if (start_bits < kPrecisionFloor) start_bits = kPrecisionFloor;
  // at least one doubling must fit under the ceiling, or agreement is untestable
  while (start_bits * 2 > ceiling_bits && start_bits > kPrecisionFloor) start_bits /= 2;
  std::vector<double> prev = alternating_levels(log_z_at(start_bits));
  for (int prec = start_bits * 2; prec <= ceiling_bits; prec *= 2) {
    std::vector<double> cur = alternating_levels(log_z_at(prec));
    if (levels_agree(prev, cur)) return cur;
    prev = std::move(cur);
  }
  throw cancellation_failure(
      "cancellation failure: alternating sums did not stabilize below the precision ceiling (" +
      std::to_string(ceiling_bits) + " bits)");
}

LevelMeasure symmetric_invert(const SymmetricZeroPattern& z, int precision_bits) {
  const int n = z.n();
  auto log_z_at = [&z, n](int prec) {
    std::vector<Real> L;
    L.reserve(n + 1);
    for (int j = 0; j <= n; ++j) L.push_back(log(Real(z.at(j), prec)));
    return L;
  };
  return LevelMeasure(n, escalate_levels(log_z_at, precision_bits));
}

}  // namespace prp
