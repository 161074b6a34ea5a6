#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "surface_census/enumerate.hpp"
#include "surface_census/errors.hpp"
#include "surface_census/permutation.hpp"
#include "surface_census/rng.hpp"

using namespace surface_census;
namespace oracle = surface_census::testing;

TEST_CASE("matchings_count is the double factorial of n - 1") {
  CHECK(matchings_count(2) == 1);
  CHECK(matchings_count(4) == 3);
  CHECK(matchings_count(6) == 15);
  CHECK(matchings_count(8) == 105);
  CHECK(matchings_count(10) == 945);
  CHECK(matchings_count(12) == 10395);
}

TEST_CASE("enumeration visits every matching exactly once, in order") {
  for (int n : {2, 4, 6, 8, 12}) {
    std::vector<std::vector<int>> seen;
    enumerate_matchings(n, [&](const Permutation& alpha) {
      seen.push_back(alpha.image());
      for (int i = 1; i <= n; ++i) {
        CHECK(alpha(i) != i);
        CHECK(alpha(alpha(i)) == i);
      }
    });
    CHECK(Int(seen.size()) == matchings_count(n));
    CHECK(std::is_sorted(seen.begin(), seen.end()));

    std::vector<std::vector<int>> expected = oracle::all_matchings(n);
    std::sort(expected.begin(), expected.end());
    CHECK(seen == expected);
  }
}

TEST_CASE("enumeration refuses to run past the cap") {
  int visits = 0;
  const auto count_visit = [&](const Permutation&) { ++visits; };
  CHECK_THROWS_AS(enumerate_matchings(16, count_visit), CapExceeded);
  CHECK(visits == 0);

  try {
    enumerate_matchings(16, count_visit);
  } catch (const CapExceeded& e) {
    CHECK(e.required() == matchings_count(16));
  }

  CHECK_THROWS_AS(enumerate_matchings(8, count_visit, 6), CapExceeded);
  CHECK_NOTHROW(enumerate_matchings(8, count_visit, 8));
  CHECK(visits == 105);
}

TEST_CASE("partition enumeration is complete") {
  const std::vector<int> partition_numbers = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 1; n <= 12; ++n) {
    int count = 0;
    enumerate_partitions(n, [&](const std::vector<int>& parts) {
      ++count;
      int total = 0;
      for (int part : parts) total += part;
      CHECK(total == n);
      CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
    });
    CHECK(count == partition_numbers[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("glued law at six edges with triangles") {
  const DistributionPair dist = exact_ab_distribution(6, 3);
  CHECK(dist.cycles.n == 6);
  CHECK(dist.cycles.probs == std::map<int, Rational>{{1, Rational(1, 5)}, {3, Rational(4, 5)}});

  const std::map<CycleType, Rational> expected_classes = {
      {CycleType{{2, 2, 2}}, Rational(1, 5)},
      {CycleType{{4, 1, 1}}, Rational(3, 5)},
      {CycleType{{6}}, Rational(1, 5)},
  };
  CHECK(dist.classes.probs == expected_classes);
  CHECK(dist.classes.cycle_marginal().probs == dist.cycles.probs);
}

TEST_CASE("glued law at twelve edges with triangles") {
  const DistributionPair dist = exact_ab_distribution(12, 3);
  CHECK(dist.cycles.probs ==
        std::map<int, Rational>{{2, Rational(169, 385)},
                                {4, Rational(40, 77)},
                                {6, Rational(16, 385)}});
  Rational total = 0;
  for (const auto& [type, p] : dist.classes.probs) {
    CHECK(type.n() == 12);
    total += p;
  }
  CHECK(total == 1);
  CHECK(dist.classes.cycle_marginal().probs == dist.cycles.probs);

  const MomentSet moments = brute_moments(dist.cycles, 2);
  CHECK(moments.raw[0] == Rational(1234, 385));
  CHECK(moments.central[1] == Rational(191264, 148225));
}

TEST_CASE("glued law at eight edges with squares matches a direct sweep") {
  const DistributionPair dist = exact_ab_distribution(8, 4);
  const Permutation beta = make_beta(8, 4);

  std::map<int, Int> hist;
  for (const auto& image : oracle::all_matchings(8)) {
    std::vector<int> composed(8);
    for (int i = 1; i <= 8; ++i) composed[i - 1] = beta(image[i - 1]);
    hist[oracle::slow_cycle_count(composed)] += 1;
  }
  std::map<int, Rational> expected;
  for (const auto& [t, count] : hist) expected[t] = Rational(count, 105);
  CHECK(dist.cycles.probs == expected);
}

TEST_CASE("the glued law only depends on the conjugacy class of the base") {
  const DistributionPair canonical = exact_ab_distribution(6, 3);
  Rng rng(5);
  const Permutation by = random_permutation(6, rng);
  const Permutation twisted = conjugate(make_beta(6, 3), by);
  const DistributionPair same = exact_ab_distribution_with_beta(twisted, 3);
  CHECK(same.cycles.probs == canonical.cycles.probs);
  CHECK(same.classes.probs == canonical.classes.probs);
}

TEST_CASE("a base permutation outside the class is rejected") {
  CHECK_THROWS_AS(exact_ab_distribution_with_beta(Permutation::identity(6), 3),
                  InvalidParams);
  // One 3-cycle plus fixed points is not [3, 3].
  CHECK_THROWS_AS(exact_ab_distribution_with_beta(Permutation({2, 3, 1, 4, 5, 6}), 3),
                  InvalidParams);
}

TEST_CASE("alternating-group law by classes matches the generating function") {
  const DistributionPair dist = exact_tau_distribution(5);
  const std::map<CycleType, Rational> expected_classes = {
      {CycleType{{1, 1, 1, 1, 1}}, Rational(1, 60)},
      {CycleType{{2, 2, 1}}, Rational(15, 60)},
      {CycleType{{3, 1, 1}}, Rational(20, 60)},
      {CycleType{{5}}, Rational(24, 60)},
  };
  CHECK(dist.classes.probs == expected_classes);
  CHECK(dist.classes.cycle_marginal().probs == dist.cycles.probs);

  const UnivariatePolynomial gf = g_tau(5);
  for (const auto& [t, p] : dist.cycles.probs) CHECK(p == gf.coefficient(t));
}

TEST_CASE("class sizes agree with the multiplicity formula") {
  const DistributionPair dist = exact_tau_distribution(7);
  const Int half_order = factorial(7) / 2;
  for (const auto& [type, p] : dist.classes.probs)
    CHECK(p == Rational(oracle::class_size_by_multiplicity(type.parts), half_order));
}

TEST_CASE("alternating-group law refuses to enumerate too many partitions") {
  int expected = 0;
  enumerate_partitions(41, [&](const std::vector<int>&) { ++expected; });
  try {
    exact_tau_distribution(41, 40);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.required() == expected);
  }
}

TEST_CASE("distance to the uniform alternating law") {
  const Rational tv = tv_distance(12, 3);
  CHECK(tv >= 0);
  CHECK(tv <= 1);
  // Frozen regression value, computed by full enumeration of all 10395
  // matchings against the exact class law of the alternating group.
  CHECK(tv == Rational(Int(89869709), Int(239500800)));

  CHECK_THROWS_AS(tv_distance(6, 3), RegimeMismatch);

  const Rational tv84 = tv_distance(8, 4);
  CHECK(tv84 >= 0);
  CHECK(tv84 <= 1);
}

TEST_CASE("moments read off a distribution directly") {
  CycleDistribution pmf;
  pmf.n = 4;
  pmf.probs = {{1, Rational(1, 2)}, {3, Rational(1, 2)}};
  const MomentSet set = brute_moments(pmf, 2);
  CHECK(set.raw[0] == 2);
  CHECK(set.raw[1] == 5);
  CHECK(set.central[1] == 1);

  const MomentSet glued = brute_moments(exact_ab_distribution(6, 3).cycles, 2);
  CHECK(glued.raw[0] == Rational(13, 5));
  CHECK(glued.central[1] == Rational(16, 25));
}

TEST_CASE("tail and point probabilities of an exact law") {
  const CycleDistribution dist = exact_ab_distribution(6, 3).cycles;
  CHECK(dist.prob(1) == Rational(1, 5));
  CHECK(dist.prob(2) == 0);
  CHECK(dist.tail(0) == 1);
  CHECK(dist.tail(1) == 1);
  CHECK(dist.tail(2) == Rational(4, 5));
  CHECK(dist.tail(3) == Rational(4, 5));
  CHECK(dist.tail(4) == 0);
}
