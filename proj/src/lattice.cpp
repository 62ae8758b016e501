#include "prp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "prp/polylog.hpp"

namespace prp {

CurieWeissSpec::CurieWeissSpec(int n_, double beta_) : n(n_), beta(beta_) {
  if (n < 2 || n > 4096) throw std::invalid_argument("curie-weiss: need 2 <= n <= 4096");
  if (!(beta >= 0.0)) throw std::invalid_argument("curie-weiss: need beta >= 0");
}

namespace {

// log z_j for j = 0..n from the constrained partition sums
//   N_j = sum_{k=0}^{n-j} C(n-j,k) exp(J((2k-n)^2 - n)/2),   z_j = N_j / N_0.
// All terms are positive, so a single evaluation at the working precision is
// accurate to ~n ulps; only the downstream alternating sums need escalation.
std::vector<Real> cw_log_z(int n, double beta, int prec) {
  std::vector<Real> w;
  w.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    long s = 2L * k - n;
    Real a(beta, prec);
    a *= Real(static_cast<long>(s * s - n), prec);
    a /= static_cast<unsigned long>(2 * n);
    w.push_back(exp(a));
  }
  mpz_t binom;
  mpz_init(binom);
  std::vector<Real> log_n(n + 1, Real(prec));
  for (int j = 0; j <= n; ++j) {
    Real acc(prec);
    mpz_set_ui(binom, 1);
    const int top = n - j;
    for (int k = 0; k <= top; ++k) {
      Real term = w[k];
      term.mul_mpz(binom);
      acc += term;
      if (k < top) {
        mpz_mul_ui(binom, binom, static_cast<unsigned long>(top - k));
        mpz_divexact_ui(binom, binom, static_cast<unsigned long>(k + 1));
      }
    }
    log_n[j] = log(acc);
  }
  mpz_clear(binom);
  // log z_j indexed so the kernel sees log z_{n-j} at position n-j
  std::vector<Real> log_z(n + 1, Real(prec));
  for (int j = 0; j <= n; ++j) log_z[j] = log_n[j] - log_n[0];
  return log_z;
}

}  // namespace

SymmetricZeroPattern curie_weiss_zero_pattern(const CurieWeissSpec& spec, int precision_bits) {
  if (precision_bits < kPrecisionFloor) precision_bits = kPrecisionFloor;
  std::vector<Real> log_z = cw_log_z(spec.n, spec.beta, precision_bits);
  std::vector<double> z(spec.n + 1);
  for (int j = 0; j <= spec.n; ++j) {
    double lz = log_z[j].to_double();
    if (lz < -700.0)
      throw std::domain_error(
          "curie-weiss zero pattern underflows double at this n; use the negativity search");
    z[j] = std::exp(lz);
  }
  z[0] = 1.0;
  return SymmetricZeroPattern(spec.n, std::move(z));
}

namespace {

struct PerN {
  bool found = false;
  bool cancelled = false;
  int k = 0;
  double level = 0.0;
};

PerN search_one_n(double beta, int n, int precision_bits) {
  PerN r;
  auto log_z_at = [n, beta](int prec) { return cw_log_z(n, beta, prec); };
  std::vector<double> lambda;
  try {
    lambda = escalate_levels(log_z_at, precision_bits);
  } catch (const cancellation_failure&) {
    r.cancelled = true;
    return r;
  }
  for (int k = 1; k <= n; ++k) {
    if (lambda[k] < -1e-9) {
      r.found = true;
      r.k = k;
      r.level = lambda[k];
      return r;
    }
  }
  return r;
}

}  // namespace

NegativitySearch curie_weiss_negativity_search(double beta, int n_max, int precision_bits,
                                               int threads) {
  if (n_max < 2 || n_max > 4096)
    throw std::invalid_argument("negativity search: need 2 <= n_max <= 4096");
  if (!(beta >= 0.0)) throw std::invalid_argument("negativity search: need beta >= 0");
  if (threads < 1) threads = 1;
  NegativitySearch out;
  const int block = std::max(1, threads) * 4;
  for (int lo = 2; lo <= n_max; lo += block) {
    const int hi = std::min(n_max, lo + block - 1);
    std::vector<PerN> results(hi - lo + 1);
    if (threads <= 1) {
      for (int n = lo; n <= hi; ++n) results[n - lo] = search_one_n(beta, n, precision_bits);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (int n = lo + t; n <= hi; n += threads)
            results[n - lo] = search_one_n(beta, n, precision_bits);
        });
      }
      for (auto& th : pool) th.join();
    }
    for (int n = lo; n <= hi; ++n) {
      const PerN& r = results[n - lo];
      if (r.cancelled) {
        out.cancelled.push_back(n);
      } else if (r.found) {
        out.found = true;
        out.n = n;
        out.k = r.k;
        out.level = r.level;
        return out;
      }
    }
  }
  return out;
}

Verdict tree_mc_verdict(int d, double r) {
  if (d < 3) throw std::invalid_argument("tree verdict needs d >= 3");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("tree verdict needs r in (0,1)");
  return r < root_r2(d).threshold ? Verdict::not_in_R : Verdict::inconclusive;
}

Verdict ising_verdict(int d, double J) {
  if (d < 2) throw std::invalid_argument("ising verdict needs d >= 2");
  if (!(J > 0.0)) throw std::invalid_argument("ising verdict needs J > 0");
  const double boundary_zero_prob = 1.0 / (1.0 + std::exp(-4.0 * d * J));
  return boundary_zero_prob <= root_r2(2 * d).threshold ? Verdict::not_in_R
                                                        : Verdict::inconclusive;
}

}  // namespace prp
