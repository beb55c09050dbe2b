#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wsa/combinatorics.hpp"
#include "wsa/rng.hpp"

using namespace wsa;

TEST_CASE("max_support_size") {
  CHECK(max_support_size(WeightVector::uniform(50), 7.0) == 7);
  CHECK(max_support_size(WeightVector::sqrt_index(100), 100.0) == 13);
  CHECK(max_support_size(WeightVector({1.0, std::sqrt(2.0), std::sqrt(3.0)}), 2.5) == 1);
  CHECK(max_support_size(WeightVector::uniform(3), 0.0) == 0);
}

TEST_CASE("count_supports small cases") {
  CHECK(count_supports(WeightVector::uniform(5), 2.0, CountMode::exact) == 10);
  // budget 0: only the empty set
  CHECK(count_supports(WeightVector::uniform(5), 0.0, CountMode::exact) == 1);
  CHECK(count_supports(WeightVector::uniform(5), 0.0, CountMode::at_most) == 1);
  // non-integer budget with integer weights: no exact hit
  CHECK(count_supports(WeightVector::uniform(5), 1.5, CountMode::exact) == 0);
  CHECK(count_supports(WeightVector::uniform(5), 1.5, CountMode::at_most) == 6);
}

TEST_CASE("count_supports matches binomials for uniform weights") {
  for (int n = 1; n <= 20; n += 4) {
    WeightVector w = WeightVector::uniform(static_cast<std::size_t>(n));
    mpz_class binom = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(count_supports(w, static_cast<double>(k), CountMode::exact) == binom);
      binom = binom * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("distinct-partition counts: DP vs recurrence vs published values") {
  BigCount dp100 = count_supports(WeightVector::sqrt_index(100), 100.0, CountMode::exact);
  CHECK(dp100 == oracle::distinct_partition_count(100));
  CHECK(dp100 == 444793);  // one less than the 444794 sometimes quoted for this count

  BigCount dp1000 = count_supports(WeightVector::sqrt_index(1000), 1000.0, CountMode::exact);
  CHECK(dp1000 == mpz_class("8635565795744155161506"));
  CHECK(dp1000 == oracle::distinct_partition_count(1000));
}

TEST_CASE("enumerate_supports lexicographic order") {
  WeightVector w({1.0, std::sqrt(2.0), std::sqrt(3.0)});
  std::vector<SupportSet> got = collect_supports(w, 3.0, 3);
  REQUIRE(got.size() == 5);
  CHECK(got[0].empty());
  CHECK(got[1].indices() == std::vector<int>{0});
  CHECK(got[2].indices() == std::vector<int>{0, 1});
  CHECK(got[3].indices() == std::vector<int>{1});
  CHECK(got[4].indices() == std::vector<int>{2});

  CHECK(collect_supports(WeightVector::uniform(3), 3.0, 3).size() == 8);
  CHECK(collect_supports(WeightVector::uniform(3), 0.0, 3).size() == 1);
}

TEST_CASE("enumerate_supports refuses large n_limit") {
  WeightVector w = WeightVector::uniform(30);
  CHECK_THROWS_AS(collect_supports(w, 3.0, 26), unsupported_error);
}

TEST_CASE("count/enumerate/bitmask agreement on random integer weights") {
  std::mt19937_64 rng = seeded_engine(4);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 13);  // up to 16
    std::vector<double> wv(static_cast<std::size_t>(n));
    for (double& v : wv) v = std::sqrt(static_cast<double>(1 + rng() % 6));
    WeightVector w(wv);
    double budget = static_cast<double>(rng() % 20);

    BigCount at_most = count_supports(w, budget, CountMode::at_most);
    CHECK(at_most == oracle::subset_count(w, budget, false));
    CHECK(at_most == static_cast<long>(collect_supports(w, budget, n).size()));
    CHECK(count_supports(w, budget, CountMode::exact) == oracle::subset_count(w, budget, true));

    // max_support_size agrees with the largest enumerated support
    std::size_t largest = 0;
    for (const SupportSet& s : collect_supports(w, budget, n)) {
      largest = std::max(largest, s.size());
    }
    CHECK(max_support_size(w, budget) == static_cast<int>(largest));

    // monotone in the budget
    CHECK(count_supports(w, budget, CountMode::at_most) <=
          count_supports(w, budget + 3.0, CountMode::at_most));
  }
}

TEST_CASE("non-integer squared weights fall back to enumeration or refuse") {
  std::vector<double> wv(10, 1.3);
  WeightVector small(wv);
  CHECK(count_supports(small, 2.0, CountMode::at_most) == 11);  // empty set + 10 singletons

  std::vector<double> big(30, 1.3);
  CHECK_THROWS_AS(count_supports(WeightVector(big), 2.0, CountMode::at_most),
                  unsupported_error);
}
