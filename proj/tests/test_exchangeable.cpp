#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "prp/exchangeable.hpp"
#include "prp/measures.hpp"

using namespace prp;

namespace {

// Regularized lower gamma CDF P(Gamma(k,1) <= s) for integer k.
double gamma_cdf(int k, double s) {
  double tail = 0.0, term = 1.0;
  for (int i = 0; i < k; ++i) {
    tail += term;
    term *= s / (i + 1);
  }
  return 1.0 - std::exp(-s) * tail;
}

double ks_uniform(std::vector<double> draws) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    d = std::max(d, std::fabs(draws[i] - i / n));
    d = std::max(d, std::fabs(draws[i] - (i + 1) / n));
  }
  return d;
}

}  // namespace

TEST_CASE("transform to the levy side") {
  SUBCASE("single atom maps through phi") {
    ExchangeableNu en;
    en.atoms.emplace_back(1.0 - std::exp(-1.0), 1.0);
    LevyTriple lt = levy_from_exchangeable(en);
    CHECK(lt.gamma == 0.0);
    REQUIRE(lt.atoms.size() == 1);
    CHECK(lt.atoms[0].first == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lt.atoms[0].second == doctest::Approx(1.0));
    CHECK(lt.mass_at_infinity == 0.0);
  }
  SUBCASE("the uniform de Finetti measure carries the exponential levy density") {
    ExchangeableNu en;
    en.density.kind = SigmaKind::ex_uniform;
    LevyTriple lt = levy_from_exchangeable(en);
    CHECK(lt.density.kind == LevyKind::exp_over_s);
    // pointwise: levy density equals the pushforward of sigma
    for (double s : {0.2, 0.7, 1.5, 3.0}) {
      double x = -std::expm1(-s);
      double pushforward = sigma_density(en.density, x) * std::exp(-s);
      CHECK(levy_density(lt.density, s) == doctest::Approx(pushforward).epsilon(1e-12));
      CHECK(levy_density(lt.density, s) == doctest::Approx(std::exp(-s) / s).epsilon(1e-12));
    }
  }
  SUBCASE("product mixed with all-ones: singleton drift plus mass at infinity") {
    double p = 0.3, alpha = 0.8;
    ExchangeableNu en;
    en.c = -std::log1p(-p);
    en.full_set = -std::log(alpha);
    LevyTriple lt = levy_from_exchangeable(en);
    CHECK(lt.gamma == doctest::Approx(-std::log1p(-p)).epsilon(1e-14));
    CHECK(lt.mass_at_infinity == doctest::Approx(1.0 - alpha).epsilon(1e-14));
  }
}

TEST_CASE("transform back from the levy side") {
  SUBCASE("exponential levy measure returns the uniform de Finetti measure") {
    LevyTriple lt;
    lt.density.kind = LevyKind::exp_over_s;
    ExchangeableNu en = exchangeable_from_levy(lt);
    CHECK(en.density.kind == SigmaKind::ex_uniform);
    for (double x : {0.1, 0.4, 0.8}) {
      double s = -std::log1p(-x);
      double jacobian = levy_density(lt.density, s) / (1.0 - x);
      CHECK(sigma_density(en.density, x) == doctest::Approx(jacobian).epsilon(1e-12));
      CHECK(sigma_density(en.density, x) ==
            doctest::Approx(1.0 / (-std::log1p(-x))).epsilon(1e-12));
    }
  }
  SUBCASE("beta densities roundtrip pointwise") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.5, 1.5}}) {
      LevyTriple lt;
      lt.density = {LevyKind::beta_levy, a, b};
      ExchangeableNu en = exchangeable_from_levy(lt);
      REQUIRE(en.density.kind == SigmaKind::beta);
      for (double x = 0.05; x < 0.99; x += 0.07) {
        double s = -std::log1p(-x);
        double expected = levy_density(lt.density, s) / (1.0 - x);
        CHECK(sigma_density(en.density, x) == doctest::Approx(expected).epsilon(1e-8));
      }
      // alpha = beta = 1 collapses to the uniform case
      if (a == 1.0 && b == 1.0) {
        for (double x : {0.2, 0.6})
          CHECK(sigma_density(en.density, x) ==
                doctest::Approx(1.0 / (-std::log1p(-x))).epsilon(1e-10));
      }
    }
  }
  SUBCASE("pure drift is a product law") {
    LevyTriple lt;
    lt.gamma = 0.7;
    ExchangeableNu en = exchangeable_from_levy(lt);
    CHECK(en.c == doctest::Approx(0.7));
    CHECK(en.atoms.empty());
    CHECK(en.density.kind == SigmaKind::none);
    CHECK(en.full_set == 0.0);
  }
  SUBCASE("atom roundtrip is the identity") {
    ExchangeableNu en;
    en.c = 0.4;
    en.full_set = 0.2;
    en.atoms = {{0.15, 0.8}, {0.5, 1.2}, {0.95, 0.05}};
    ExchangeableNu back = exchangeable_from_levy(levy_from_exchangeable(en));
    CHECK(back.c == doctest::Approx(en.c).epsilon(1e-12));
    CHECK(back.full_set == doctest::Approx(en.full_set).epsilon(1e-12));
    REQUIRE(back.atoms.size() == en.atoms.size());
    for (std::size_t i = 0; i < en.atoms.size(); ++i) {
      CHECK(back.atoms[i].first == doctest::Approx(en.atoms[i].first).epsilon(1e-12));
      CHECK(back.atoms[i].second == doctest::Approx(en.atoms[i].second).epsilon(1e-12));
    }
  }
}

TEST_CASE("definetti sampler") {
  SUBCASE("no sigma: Q is the constant density") {
    double p = 0.4;
    ExchangeableNu en;
    en.c = -std::log1p(-p);
    DefinettiSampler sampler(en, 1e-4);
    for (std::uint64_t i = 0; i < 5; ++i)
      CHECK(sampler.draw(9, i) == doctest::Approx(p).epsilon(1e-14));
  }
  SUBCASE("full-set atom forces Q = 1 at the matching rate") {
    ExchangeableNu en;
    en.full_set = std::log(2.0);  // Q = 1 with probability 1/2
    DefinettiSampler sampler(en, 1e-4);
    int ones = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) ones += sampler.draw(5, i) == 1.0;
    CHECK(std::fabs(ones / 20000.0 - 0.5) < 0.011);  // ~3 sigma
  }
  SUBCASE("uniform law from the ex49 intensity") {
    ExchangeableNu en;
    en.density.kind = SigmaKind::ex_uniform;
    DefinettiSampler sampler(en, 1e-4);
    const int n = 30000;
    std::vector<double> draws(n);
    for (int i = 0; i < n; ++i) draws[i] = sampler.draw(12345, i);
    CHECK(ks_uniform(std::move(draws)) < 0.015);
  }
  SUBCASE("lebesgue intensity: atom at zero plus the Bessel-series law") {
    ExchangeableNu en;
    en.density.kind = SigmaKind::lebesgue;
    DefinettiSampler sampler(en, 1e-5);
    const int n = 30000;
    std::vector<double> draws(n);
    for (int i = 0; i < n; ++i) draws[i] = sampler.draw(77, i);
    // analytic CDF: P(Q <= t) = sum_k e^{-1}/k! P(Gamma(k) <= -log(1-t))
    auto cdf = [](double t) {
      double s = -std::log1p(-t);
      double acc = 0.0, w = std::exp(-1.0);
      for (int k = 0; k <= 40; ++k) {
        acc += w * (k == 0 ? 1.0 : gamma_cdf(k, s));
        w /= (k + 1);
      }
      return acc;
    };
    double atom = static_cast<double>(std::count(draws.begin(), draws.end(), 0.0)) / n;
    CHECK(std::fabs(atom - std::exp(-1.0)) < 0.01);
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      double emp = static_cast<double>(
                       std::count_if(draws.begin(), draws.end(), [&](double q) { return q <= t; })) /
                   n;
      CHECK(std::fabs(emp - cdf(t)) < 0.012);
    }
  }
}

TEST_CASE("laplace transform of Z") {
  SUBCASE("single-atom Campbell evaluation") {
    ExchangeableNu en;
    en.atoms.emplace_back(0.5, 1.0);
    CHECK(laplace_of_Z(en, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(laplace_of_Z(en, 0.0) == 1.0);
  }
  SUBCASE("ex49: Z is exponential(1), so E e^{-tZ} = 1/(1+t)") {
    ExchangeableNu en;
    en.density.kind = SigmaKind::ex_uniform;
    for (double t : {0.5, 1.0, 2.0})
      CHECK(laplace_of_Z(en, t) == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-3));
  }
  SUBCASE("monte carlo agreement within three standard errors") {
    ExchangeableNu en;
    en.density.kind = SigmaKind::ex_uniform;
    DefinettiSampler sampler(en, 1e-4);
    const int n = 20000;
    double t = 1.0;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
      double v = std::pow(1.0 - sampler.draw(31, i), t);  // e^{-tZ} = (1-Q)^t
      sum += v;
      sq += v * v;
    }
    double mean = sum / n;
    double se = std::sqrt((sq / n - mean * mean) / n);
    CHECK(std::fabs(mean - laplace_of_Z(en, t)) < 3.0 * se + 1e-3);
  }
  SUBCASE("empirical complete monotonicity on a t grid") {
    ExchangeableNu en;
    en.c = 0.2;
    en.atoms.emplace_back(0.3, 0.5);
    en.density.kind = SigmaKind::lebesgue;
    std::vector<double> f;
    for (double t = 0.0; t <= 3.0 + 1e-9; t += 0.25) f.push_back(laplace_of_Z(en, t));
    // alternating finite differences: f >= 0, delta f <= 0, delta^2 f >= 0 ...
    for (int order = 0; order < 4; ++order) {
      double sign = order % 2 == 0 ? 1.0 : -1.0;
      for (double v : f) CHECK(sign * v >= -1e-9);
      std::vector<double> next;
      for (std::size_t i = 0; i + 1 < f.size(); ++i) next.push_back(f[i + 1] - f[i]);
      f = std::move(next);
    }
  }
}

TEST_CASE("the product-with-all-ones law restricted to finite windows") {
  // alpha Pi_p + (1-alpha) Pi_1 restricted to [n] must match the forward law
  // of n singletons at -log(1-p) plus the full-set atom at -log(alpha).
  double p = 0.35, alpha = 0.6;
  for (int n = 2; n <= 6; ++n) {
    SubsetMeasure nu(n);
    for (int i = 0; i < n; ++i) nu.set_mass(Mask{1} << i, -std::log1p(-p));
    nu.set_mass(full_mask(n), -std::log(alpha));
    BinaryDistribution got = zero_pattern_to_distribution(forward_zero_pattern(nu));
    for (Mask c = 0; c <= full_mask(n); ++c) {
      double direct = alpha * std::pow(p, set_size(c)) * std::pow(1 - p, n - set_size(c)) +
                      (1 - alpha) * (c == full_mask(n) ? 1.0 : 0.0);
      CHECK(got.at(c) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("validation") {
  ExchangeableNu bad;
  bad.c = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  ExchangeableNu badatom;
  badatom.atoms.emplace_back(1.2, 0.5);
  CHECK_THROWS_AS(badatom.validate(), std::invalid_argument);

  LevyTriple lt;
  lt.mass_at_infinity = 1.0;
  CHECK_THROWS_AS(lt.validate(), std::invalid_argument);

  ExchangeableNu en;
  CHECK_THROWS_AS(laplace_of_Z(en, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(DefinettiSampler(en, 0.7), std::invalid_argument);
}
