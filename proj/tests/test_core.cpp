#include <doctest.h>

#include <cmath>
#include <random>

#include "wsa/rng.hpp"
#include "wsa/types.hpp"

using namespace wsa;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
}  // namespace

TEST_CASE("weighted_l0 on the three-atom example") {
  WeightVector w({1.0, kSqrt2, kSqrt3});
  CHECK(weighted_l0({9, 9, 10}, w) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(weighted_l0({0, 0, 0}, w) == 0.0);
  CHECK(weighted_l0({5, 0, 5}, WeightVector({2, 2, 2})) == doctest::Approx(8.0));
}

TEST_CASE("weighted_l0 length mismatch") {
  CHECK_THROWS_AS(weighted_l0({1.0, 2.0}, WeightVector({1.0})), dimension_error);
}

TEST_CASE("weighted_cardinality") {
  WeightVector w({1.0, kSqrt2, kSqrt3});
  CHECK(weighted_cardinality(SupportSet({0, 1, 2}), w) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(weighted_cardinality(SupportSet(), w) == 0.0);

  WeightVector ones = WeightVector::uniform(20);
  std::vector<int> prefix;
  for (int j = 0; j < 7; ++j) prefix.push_back(j);
  CHECK(weighted_cardinality(SupportSet(prefix), ones) == 7.0);

  CHECK_THROWS_AS(weighted_cardinality(SupportSet({5}), WeightVector({1.0, 1.0})),
                  dimension_error);
}

TEST_CASE("weighted_lp") {
  CHECK(weighted_lp({3, 4}, WeightVector({1, 1}), 2.0) == doctest::Approx(25.0));
  CHECK(weighted_lp({2, 0, 1}, WeightVector({1, 2, 3}), 1.0) == doctest::Approx(5.0));
  WeightVector w({1.0, kSqrt2, kSqrt3});
  CHECK(weighted_lp({9, 9, 10}, w, 1.0) ==
        doctest::Approx(9.0 + 9.0 * kSqrt2 + 10.0 * kSqrt3).epsilon(1e-14));
  CHECK_THROWS(weighted_lp({1.0}, WeightVector({1.0}), 0.0));
  CHECK_THROWS(weighted_lp({1.0}, WeightVector({1.0}), 2.5));
}

TEST_CASE("restrict_to") {
  CHECK(restrict_to({1, 2, 3}, SupportSet({1})) == Signal{0, 2, 0});
  CHECK(restrict_to({1, 2, 3}, SupportSet({0, 1, 2})) == Signal{1, 2, 3});
  CHECK(restrict_to({1, 2, 3}, SupportSet()) == Signal{0, 0, 0});
  CHECK_THROWS_AS(restrict_to({1, 2}, SupportSet({3})), dimension_error);
}

TEST_CASE("support_of uses exact zero tests") {
  CHECK(support_of({0, 5, 0, -1}).indices() == std::vector<int>{1, 3});
  CHECK(support_of({0, 0}).empty());
  CHECK(support_of({1e-300, 0}).indices() == std::vector<int>{0});
}

TEST_CASE("SupportSet invariants") {
  CHECK_THROWS_AS(SupportSet({1, 1}), dimension_error);
  CHECK_THROWS_AS(SupportSet({-1}), dimension_error);
  SupportSet s({4, 1, 2});
  CHECK(s.indices() == std::vector<int>{1, 2, 4});  // sorted on construction
  CHECK(s.complement(6).indices() == std::vector<int>{0, 3, 5});
  CHECK(s.union_with(SupportSet({0, 2})).indices() == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("WeightVector invariants") {
  CHECK_THROWS(WeightVector({0.5}));
  CHECK_THROWS(WeightVector({}));
  CHECK(WeightVector::uniform(3).is_uniform());
  CHECK(WeightVector::sqrt_index(4)[3] == doctest::Approx(2.0));
  CHECK(WeightVector({1, 3, 2}).max_weight() == 3.0);
}

TEST_CASE("random-input norm identities") {
  std::mt19937_64 rng = seeded_engine(99);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(1.0, 4.0);
  std::bernoulli_distribution keep(0.6);

  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 24);
    Signal x(static_cast<std::size_t>(n));
    std::vector<double> wv(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      x[static_cast<std::size_t>(j)] = keep(rng) ? normal(rng) : 0.0;
      wv[static_cast<std::size_t>(j)] = wdist(rng);
    }
    WeightVector w(wv);

    int nnz = static_cast<int>(support_of(x).size());
    CHECK(weighted_l0(x, w) >= static_cast<double>(nnz));
    CHECK(weighted_l0(x, w) == weighted_cardinality(support_of(x), w));
    CHECK(restrict_to(x, support_of(x)) == x);

    WeightVector ones = WeightVector::uniform(static_cast<std::size_t>(n));
    double l1 = 0.0;
    for (double v : x) l1 += std::abs(v);
    CHECK(weighted_lp(x, ones, 1.0) == doctest::Approx(l1).epsilon(1e-13));
  }
}
