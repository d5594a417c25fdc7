#include <doctest.h>

#include "acg/errors.hpp"
#include "acg/stats.hpp"
#include "acg/walkers.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

std::map<std::int64_t, Rational> as_expected(const CycleDistribution& d) { return {d.support.begin(), d.support.end()}; }

} // namespace

TEST_CASE("Stirling numbers of the first kind")
{
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(0, 0) == 1);
  bool flagged = false;
  CHECK(stirling_first(4, 5, &flagged) == 0);
  CHECK(flagged);
  stirling_first(4, 2, &flagged);
  CHECK_FALSE(flagged);
  for (int n = 0; n <= 20; ++n)
    for (int c = 0; c <= n; ++c)
      CHECK(stirling_first(n, c) == oracle::stirling(n, c));
  // Beyond 64 bits: sum over c is n!.
  BigInt sum = 0, fact = 1;
  for (int c = 0; c <= 30; ++c)
    sum += stirling_first(30, c);
  for (int i = 2; i <= 30; ++i)
    fact *= i;
  CHECK(sum == fact);
}

TEST_CASE("cycle distributions")
{
  const auto one = cycle_distribution(1, Parity::all);
  CHECK(one.support.size() == 1);
  CHECK(one.support.at(1) == 1);

  const auto all4 = cycle_distribution(4, Parity::all);
  CHECK(all4.support == std::map<int, Rational>{
                          {1, Rational(6, 24)}, {2, Rational(11, 24)}, {3, Rational(6, 24)}, {4, Rational(1, 24)}});
  const auto even4 = cycle_distribution(4, Parity::even_only);
  CHECK(even4.support == std::map<int, Rational>{{2, Rational(11, 12)}, {4, Rational(1, 12)}});
  CHECK_THROWS_AS(cycle_distribution(0, Parity::all), PreconditionError);
  CHECK(to_csv(even4) == "c,numerator,denominator\n2,11,12\n4,1,12\n");

  // Against a direct census of Sym_n and Alt_n for n <= 8.
  for (int n = 1; n <= 8; ++n) {
    std::map<int, std::uint64_t> all, even;
    std::uint64_t total = 0, total_even = 0;
    for (const auto& p : oracle::all_perms(static_cast<std::size_t>(n))) {
      const int c = oracle::cycles(p);
      ++all[c];
      ++total;
      if (oracle::even(p)) {
        ++even[c];
        ++total_even;
      }
    }
    const auto da = cycle_distribution(n, Parity::all);
    const auto de = cycle_distribution(n, Parity::even_only);
    CHECK(da.support.size() == all.size());
    CHECK(de.support.size() == even.size());
    for (const auto& [c, cnt] : all)
      CHECK(da.support.at(c) == Rational(static_cast<long long>(cnt), static_cast<long long>(total)));
    for (const auto& [c, cnt] : even)
      CHECK(de.support.at(c) == Rational(static_cast<long long>(cnt), static_cast<long long>(total_even)));
  }
}

TEST_CASE("chi-squared examples")
{
  const std::map<std::int64_t, Rational> half{{0, Rational(1, 2)}, {1, Rational(1, 2)}};
  const auto exact = chi_squared_test({{0, 50}, {1, 50}}, half);
  CHECK(exact.statistic == 0);
  CHECK(exact.pass);

  const auto lopsided = chi_squared_test({{0, 100}}, half);
  CHECK(lopsided.statistic == doctest::Approx(100.0));
  CHECK(lopsided.dof == 1);
  CHECK_FALSE(lopsided.pass);

  CHECK(chi_squared_critical(1, 0.05) == doctest::Approx(3.841458820694124));
  CHECK(chi_squared_critical(10, 0.05) == doctest::Approx(18.307038053275146));
  CHECK_THROWS_AS(chi_squared_test({}, half), PreconditionError);
  CHECK_THROWS_AS(chi_squared_test({{7, 3}}, half), PreconditionError);
}

TEST_CASE("chi-squared pools small bins")
{
  // Expected 1, 1, 98 of 100: the two small bins merge, then the merged bin
  // (2) merges with 98, leaving one bin and dof 0.
  const std::map<std::int64_t, Rational> e{{1, Rational(1, 100)}, {2, Rational(1, 100)}, {3, Rational(98, 100)}};
  const auto r = chi_squared_test({{1, 2}, {2, 0}, {3, 98}}, e);
  CHECK(r.bins == 1);
  CHECK(r.dof == 0);
  CHECK(r.pass);
}

TEST_CASE("Alt_10 uniform oracle passes the cycle test in at least 18 of 20 runs")
{
  const WalkGroup alt = WalkGroup::alternating(10);
  const auto expected = as_expected(cycle_distribution(10, Parity::even_only));
  int passed = 0;
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    Rng rng = Rng(1000).split(rep);
    std::vector<GroupElement> s;
    for (int i = 0; i < 20000; ++i)
      s.push_back(alt.random(rng));
    passed += chi_squared_test(cycle_histogram(s), expected).pass;
  }
  CHECK(passed >= 18);
}

TEST_CASE("point action uniformity")
{
  std::vector<GroupElement> rotations;
  for (int r = 0; r < 5; ++r) {
    std::vector<int> img(5);
    for (int x = 0; x < 5; ++x)
      img[x] = (x + r) % 5;
    rotations.push_back(Permutation::from_images(img));
  }
  const auto exact = point_action_uniformity(rotations, 5);
  CHECK(exact.test.statistic == 0);
  CHECK(exact.histogram == std::vector<std::uint64_t>(5, 1));

  const std::vector<GroupElement> fixed(100, Permutation::from_cycles("(1 2)", 5));
  CHECK_FALSE(point_action_uniformity(fixed, 5).test.pass);

  CHECK_THROWS_AS(point_action_uniformity(rotations, 6), TypeError);
  CHECK_THROWS_AS(point_action_uniformity({MatrixGF::identity(5)}, 2), TypeError);

  const WalkGroup alt = WalkGroup::alternating(6);
  int passed = 0;
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    Rng rng = Rng(77).split(rep);
    std::vector<GroupElement> s;
    for (int i = 0; i < 10000; ++i)
      s.push_back(alt.random(rng));
    passed += point_action_uniformity(s, 6).test.pass;
  }
  CHECK(passed >= 18);
}

TEST_CASE("total variation distance")
{
  CHECK(tv_distance({5, 5, 5}, 3) == 0);
  CHECK(tv_distance({7}, 4) == Rational(3, 4));
  CHECK(tv_distance({3, 1}, 2) == Rational(1, 4));
  // Unobserved elements count towards the distance.
  CHECK(tv_distance({1, 1}, 4) == Rational(1, 2));
  const BigInt half_fact_20 = BigInt("1216451004088320000");
  CHECK(tv_distance({1, 1}, half_fact_20) == 1 - Rational(BigInt(2), half_fact_20));
  CHECK_THROWS_AS(tv_distance({1, 1, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(tv_distance({0, 0}, 2), PreconditionError);
  CHECK(to_string(Rational(6, 24)) == "1/4");
  CHECK(to_string(Rational(3)) == "3");
}
