#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "prp/mixtures.hpp"

using namespace prp;

namespace {

MixtureSpec random_spec(int m, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> x{1.0};
  double cur = 1.0;
  for (int i = 1; i < m; ++i) x.push_back(cur *= 0.2 + 0.6 * unif(gen));
  std::vector<double> alpha(m);
  double sum = 0.0;
  for (auto& a : alpha) sum += (a = 0.1 + unif(gen));
  for (auto& a : alpha) a /= sum;
  double q = 0.3 + 0.7 * unif(gen);
  return MixtureSpec(q, x, alpha);
}

}  // namespace

TEST_CASE("level closed forms") {
  SUBCASE("half/half mixture of densities 1 and 1/2 at n = 3") {
    MixtureSpec spec(1.0, {1.0, 0.5}, {0.5, 0.5});
    LevelMeasure lm = mixture_levels(spec, 3, 256);
    CHECK(lm.level(1) == doctest::Approx(std::log(10.0 / 9.0)).epsilon(1e-12));
  }
  SUBCASE("x_2 = 0 concentrates on the singleton and full levels") {
    for (double q : {1.0, 0.6}) {
      double a1 = 0.37;
      MixtureSpec spec(q, {1.0, 0.0}, {a1, 1.0 - a1});
      const int n = 5;
      LevelMeasure lm = mixture_levels(spec, n, 256);
      CHECK(lm.level(1) == doctest::Approx(-std::log(q)).epsilon(1e-12));
      for (int ell = 2; ell < n; ++ell)
        CHECK(lm.level(ell) == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(lm.level(n) == doctest::Approx(-std::log(a1)).epsilon(1e-12));
    }
  }
  SUBCASE("q only moves the singleton level") {
    MixtureSpec a(1.0, {1.0, 0.8, 0.3}, {0.5, 0.25, 0.25});
    MixtureSpec b(0.5, {1.0, 0.8, 0.3}, {0.5, 0.25, 0.25});
    const int n = 6;
    LevelMeasure la = mixture_levels(a, n, 256);
    LevelMeasure lb = mixture_levels(b, n, 256);
    for (int ell = 2; ell <= n; ++ell)
      CHECK(la.level(ell) == doctest::Approx(lb.level(ell)).epsilon(1e-12));
    CHECK(lb.level(1) - la.level(1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("mixture levels agree with both inversion routes") {
  std::mt19937_64 gen(71);
  for (int rep = 0; rep < 12; ++rep) {
    int m = 2 + static_cast<int>(gen() % 2);  // 2..3
    MixtureSpec spec = random_spec(m, gen);
    for (int n : {3, 5, 8}) {
      LevelMeasure lm = mixture_levels(spec, n, 256);
      SymmetricZeroPattern z = spec.zero_pattern(n);
      LevelMeasure sym = symmetric_invert(z, 256);
      SignedSubsetMeasure full = invert(z.expand());
      for (int ell = 1; ell <= n; ++ell) {
        CHECK(lm.level(ell) == doctest::Approx(sym.level(ell)).epsilon(1e-9));
        CHECK(lm.level(ell) == doctest::Approx(full.mass(full_mask(ell))).epsilon(1e-9));
      }
      // the Cauchy-Schwarz floor on the first two levels
      CHECK(lm.level(1) >= -std::log(spec.q) - 1e-12);
      CHECK(lm.level(2) >= -1e-12);
    }
  }
}

TEST_CASE("asymptotic sign from the polylogarithm") {
  CHECK(sign_near_one(3, 0.6) == SignNearOne::positive);
  CHECK(sign_near_one(3, 0.4) == SignNearOne::negative);
  CHECK(sign_near_one(3, 0.5) == SignNearOne::boundary);
  CHECK_THROWS_AS(sign_near_one(2, 0.5), std::invalid_argument);
}

TEST_CASE("threshold classification") {
  CHECK(threshold_classify(3, 0.6) == ThresholdClass::representable_near_one);
  CHECK(threshold_classify(3, 0.4) == ThresholdClass::not_representable_near_one);
  CHECK(threshold_classify(5, 0.85) == ThresholdClass::not_representable_near_one);
  CHECK(threshold_classify(5, 0.95) == ThresholdClass::representable_near_one);
  // exact boundary for n = 4 stays representable
  CHECK(threshold_classify(4, (3.0 + std::sqrt(3.0)) / 6.0) ==
        ThresholdClass::representable_near_one);
}

TEST_CASE("phase scan") {
  SUBCASE("the k = 3 negative region reaches the x2 -> 1 edge below alpha 1/2") {
    std::vector<double> alphas;
    for (double a = 0.05; a < 0.96; a += 0.05) alphas.push_back(a);
    auto cells = phase_scan(3, alphas, {0.99}, 1.0, 256, 2);
    for (const auto& cell : cells) {
      REQUIRE(cell.k == 3);
      if (cell.unresolved) continue;
      if (cell.alpha1 <= 0.45) CHECK(cell.sign == -1);
      if (cell.alpha1 >= 0.55) CHECK(cell.sign == 1);
    }
  }
  SUBCASE("x2 = 0 column never goes negative") {
    auto cells = phase_scan(4, {0.2, 0.5, 0.8}, {0.0}, 1.0, 256, 1);
    for (const auto& cell : cells) CHECK(cell.sign >= 0);
  }
  SUBCASE("scan output is q-independent and deterministic across workers") {
    std::vector<double> alphas{0.2, 0.4, 0.6, 0.8};
    std::vector<double> x2s{0.3, 0.7, 0.95};
    auto a = phase_scan(5, alphas, x2s, 1.0, 256, 1);
    auto b = phase_scan(5, alphas, x2s, 0.3, 256, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].alpha1 == b[i].alpha1);
      CHECK(a[i].x2 == b[i].x2);
      CHECK(a[i].k == b[i].k);
      CHECK(a[i].level == doctest::Approx(b[i].level).epsilon(1e-12));
      CHECK(a[i].sign == b[i].sign);
    }
  }
}

TEST_CASE("infinite exchangeable mixtures") {
  CHECK(exchangeable_mixture_in_R(2, {0.3, 1.0}, {0.4, 0.6}));
  CHECK_FALSE(exchangeable_mixture_in_R(2, {0.3, 0.9}, {0.4, 0.6}));
  CHECK_FALSE(exchangeable_mixture_in_R(3, {0.1, 0.5, 1.0}, {0.3, 0.3, 0.4}));
  CHECK_THROWS_AS(exchangeable_mixture_in_R(1, {0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(exchangeable_mixture_in_R(2, {0.9, 0.3}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(MixtureSpec(0.0, {1.0, 0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MixtureSpec(1.0, {0.9, 0.5}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MixtureSpec(1.0, {1.0, 0.5, 0.5}, {0.4, 0.3, 0.3}), std::invalid_argument);
  CHECK_THROWS_AS(MixtureSpec(1.0, {1.0, 0.5}, {0.7, 0.5}), std::invalid_argument);
}
