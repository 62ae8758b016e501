#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "prp/json_io.hpp"

using namespace prp;

TEST_CASE("measure json schema") {
  json j = json::parse(R"({"n": 3, "atoms": [{"set": [1,2], "mass": 0.693147},
                                             {"set": [3], "mass": 0.5}]})");
  SubsetMeasure nu = subset_measure_from_json(j);
  CHECK(nu.n() == 3);
  CHECK(nu.mass(0b011) == doctest::Approx(0.693147));
  CHECK(nu.mass(0b100) == doctest::Approx(0.5));

  json round = to_json(nu);
  SubsetMeasure again = subset_measure_from_json(round);
  CHECK(again.mass(0b011) == doctest::Approx(nu.mass(0b011)));
  CHECK(round["atoms"][0]["set"] == json::array({1, 2}));  // 1-based, increasing

  CHECK_THROWS_AS(subset_measure_from_json(json::parse(R"({"n":2,"atoms":[{"set":[2,1],"mass":1}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(subset_measure_from_json(json::parse(R"({"n":2,"atoms":[{"set":[3],"mass":1}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(subset_measure_from_json(json::parse(R"({"n":2,"atoms":[{"set":[],"mass":1}]})")),
                  std::invalid_argument);
}

TEST_CASE("signed measures accumulate duplicate sets") {
  json j = json::parse(R"({"n": 2, "atoms": [{"set": [1], "mass": -0.25},
                                             {"set": [1], "mass": 1.0}]})");
  SignedSubsetMeasure nu = signed_measure_from_json(j);
  CHECK(nu.mass(1) == doctest::Approx(0.75));
}

TEST_CASE("distribution json schema") {
  json j = json::parse(R"({"n": 2, "probs": [0.25, 0.25, 0.25, 0.25]})");
  BinaryDistribution d = distribution_from_json(j);
  CHECK(d.at(0) == 0.25);
  json round = to_json(d);
  CHECK(round["probs"].size() == 4);
}

TEST_CASE("symmetric pattern and gap law schemas") {
  SymmetricZeroPattern z = symmetric_pattern_from_json(json::parse(R"({"n":2,"z":[1.0,0.5,0.3]})"));
  CHECK(z.at(2) == 0.3);
  GapDistribution g = gaps_from_json(json::parse(R"({"b":[0.5,0.5]})"));
  CHECK(g.mean() == doctest::Approx(1.5));
}

TEST_CASE("exchangeable measure schema") {
  json j = json::parse(R"({"c": 0.5, "fullset": 0.2,
                           "atoms": [{"x": 0.3, "mass": 1.0}],
                           "density": {"kind": "beta", "params": {"a": 2.0, "b": 3.0}}})");
  ExchangeableNu en = exchangeable_from_json(j);
  CHECK(en.c == 0.5);
  CHECK(en.full_set == 0.2);
  CHECK(en.density.kind == SigmaKind::beta);
  CHECK(en.density.a == 2.0);

  LevyTriple lt = levy_from_exchangeable(en);
  json lj = to_json(lt);
  CHECK(lj["density"]["kind"] == "beta-levy");
  LevyTriple back = levy_from_json(lj);
  CHECK(back.gamma == doctest::Approx(lt.gamma));
  CHECK(back.mass_at_infinity == doctest::Approx(lt.mass_at_infinity));

  CHECK_THROWS_AS(
      exchangeable_from_json(json::parse(R"({"c":0,"density":{"kind":"cauchy"}})")),
      std::invalid_argument);
}

TEST_CASE("density ids") {
  ExchangeableNu a = exchangeable_from_json(json::parse(R"({"density":{"kind":"lebesgue"}})"));
  CHECK(a.density.kind == SigmaKind::lebesgue);
  ExchangeableNu b = exchangeable_from_json(json::parse(R"({"density":{"kind":"ex49"}})"));
  CHECK(b.density.kind == SigmaKind::ex_uniform);
  json round = to_json(b);
  CHECK(round["density"]["kind"] == "ex49");
}
