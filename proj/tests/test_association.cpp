#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "prp/association.hpp"
#include "prp/moebius.hpp"

using namespace prp;

namespace {

constexpr Mask S1 = 1, S2 = 2, S3 = 4, S4 = 8;

SubsetMeasure random_measure(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unif(0.0, 1.2);
  SubsetMeasure nu(n);
  for (Mask s = 1; s <= full_mask(n); ++s) nu.set_mass(s, unif(gen));
  return nu;
}

BinaryDistribution product_law(int n, double p) {
  std::vector<double> prob(std::size_t{1} << n);
  for (Mask c = 0; c <= full_mask(n); ++c)
    prob[c] = std::pow(p, set_size(c)) * std::pow(1 - p, n - set_size(c));
  return BinaryDistribution(n, prob);
}

}  // namespace

TEST_CASE("monotone function counts follow the Dedekind numbers") {
  CHECK(monotone_truth_tables(0).size() == 2);
  CHECK(monotone_truth_tables(1).size() == 3);
  CHECK(monotone_truth_tables(2).size() == 6);
  CHECK(monotone_truth_tables(3).size() == 20);
  CHECK(monotone_truth_tables(4).size() == 168);
  CHECK_THROWS_AS(monotone_truth_tables(5), std::invalid_argument);
}

TEST_CASE("product laws are positively associated and downward FKG") {
  for (double p : {0.2, 0.5, 0.8}) {
    BinaryDistribution d = product_law(3, p);
    CHECK(check_positive_association(d).pass);
    CHECK(check_downward_fkg(d).pass);
  }
}

TEST_CASE("the divide-and-color counterexample fails positive association") {
  // Two partitions of four sites, (12|3|4) and (1|2|34), each with
  // probability 1/2; clusters colored 1 with probability 1/2.
  std::vector<double> prob(16, 0.0);
  const double p = 0.5;
  for (int part = 0; part < 2; ++part) {
    std::vector<std::vector<int>> clusters =
        part == 0 ? std::vector<std::vector<int>>{{0, 1}, {2}, {3}}
                  : std::vector<std::vector<int>>{{0}, {1}, {2, 3}};
    for (Mask colors = 0; colors < (Mask{1} << clusters.size()); ++colors) {
      Mask cfg = 0;
      double w = 0.5;
      for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        bool one = colors >> ci & 1u;
        w *= one ? p : 1 - p;
        if (one)
          for (int site : clusters[ci]) cfg |= Mask{1} << site;
      }
      prob[cfg] += w;
    }
  }
  BinaryDistribution d(4, prob);
  auto res = check_positive_association(d);
  CHECK_FALSE(res.pass);
  // the witness pair realizes A = {X1 = X2 = 1}, B = {X3 = X4 = 1}
  std::uint32_t a_table = 0, b_table = 0;
  for (Mask c = 0; c < 16; ++c) {
    if ((c & (S1 | S2)) == (S1 | S2)) a_table |= 1u << c;
    if ((c & (S3 | S4)) == (S3 | S4)) b_table |= 1u << c;
  }
  CHECK(res.f == std::min(a_table, b_table));
  CHECK(res.g == std::max(a_table, b_table));
  CHECK(res.violation == doctest::Approx(9.0 / 64.0 - 1.0 / 8.0));
}

TEST_CASE("the random-permutation law passes positive association") {
  std::vector<double> prob(8, 0.0);
  prob[0] = 1.0 / 3.0;
  prob[S1] = prob[S2] = prob[S3] = 1.0 / 6.0;
  prob[S1 | S2 | S3] = 1.0 / 6.0;
  CHECK(check_positive_association(BinaryDistribution(3, prob)).pass);
}

TEST_CASE("(X, Y, XY) fails downward FKG by conditioning on the product") {
  std::vector<double> prob(8, 0.0);
  prob[0] = prob[S1] = prob[S2] = prob[S1 | S2 | S3] = 0.25;
  BinaryDistribution d(3, prob);
  CHECK(check_positive_association(d).pass);  // increasing functions of iid
  auto res = check_downward_fkg(d);
  CHECK_FALSE(res.pass);
  CHECK(res.conditioning == S3);
  // P(X=Y=1 | XY=0) = 0 while the marginals conditioned are 1/3 each
  CHECK(res.violation == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("Poisson-generated laws are downward FKG") {
  SUBCASE("the two-pair construction") {
    SubsetMeasure nu(3);
    nu.set_mass(S1 | S2, std::log(2.0));
    nu.set_mass(S2 | S3, std::log(2.0));
    BinaryDistribution d = zero_pattern_to_distribution(forward_zero_pattern(nu));
    CHECK(check_downward_fkg(d).pass);
    // and yet it is not FKG: conditioned on X2 = 1 the ends repel; the
    // downward checker must not see that because it conditions on zeros only.
  }
  SUBCASE("random intensities, n <= 4") {
    std::mt19937_64 gen(71);
    for (int rep = 0; rep < 25; ++rep) {
      int n = 2 + static_cast<int>(gen() % 3);  // 2..4
      SubsetMeasure nu = random_measure(n, gen);
      BinaryDistribution d = zero_pattern_to_distribution(forward_zero_pattern(nu));
      auto fkg = check_downward_fkg(d);
      CHECK(fkg.pass);
      CHECK(check_positive_association(d).pass);
      // representable by construction
      CHECK(is_representable(distribution_to_zero_pattern(d), 1e-9).representable);
    }
  }
}
