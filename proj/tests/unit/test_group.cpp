#include <cmath>
#include <map>

#include <doctest.h>

#include "acg/errors.hpp"
#include "acg/group.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

Permutation perm(const char* cycles, std::size_t n) { return Permutation::from_cycles(cycles, n); }

oracle::Perm to_oracle(const Permutation& p)
{
  return oracle::Perm(p.view().begin(), p.view().end());
}

MatrixGF mat(std::uint32_t p, std::array<std::int64_t, 4> e) { return MatrixGF::from_entries(p, e); }

} // namespace

TEST_CASE("group specs enumerate to the right order")
{
  CHECK(make_group("cyclic:1")->order() == 1);
  CHECK(make_group("sym:5")->order() == 120);
  CHECK(make_group("alt:5")->order() == 60);
  CHECK(make_group("sl2:5")->order() == 120);
  CHECK(make_group("sl2:7")->order() == 336);
  CHECK(make_group("abelian:2,4")->order() == 8);
  CHECK(make_group("dihedral:6")->order() == 12);
  CHECK(make_group("sl2:2")->order() == 6);

  // 5! by direct enumeration of the oracle.
  CHECK(oracle::all_perms(5).size() == make_group("sym:5")->order());
  std::size_t even = 0;
  for (const auto& p : oracle::all_perms(6))
    even += oracle::even(p);
  CHECK(make_group("alt:6")->order() == even);
}

TEST_CASE("cyclic:1 holds only the identity")
{
  const auto g = make_group("cyclic:1");
  REQUIRE(g->order() == 1);
  CHECK(is_identity(g->element(0)));
}

TEST_CASE("sl2:5 generators are the transvections with off-diagonal 2")
{
  const auto g = make_group("sl2:5");
  REQUIRE(g->generators().size() == 2);
  CHECK(g->element(g->generators()[0]) == GroupElement(mat(5, {1, 0, 2, 1})));
  CHECK(g->element(g->generators()[1]) == GroupElement(mat(5, {1, 2, 0, 1})));
}

TEST_CASE("canonical ordering: identity first, then payload order")
{
  for (const char* spec : {"sym:4", "sl2:3", "abelian:3,3", "dihedral:5"}) {
    const auto g = make_group(spec);
    CHECK(is_identity(g->element(0)));
    for (Index i = 2; i < g->order(); ++i)
      CHECK(payload_compare(g->element(i - 1), g->element(i)) < 0);
    for (Index i = 0; i < g->order(); ++i)
      CHECK(g->index_of(g->element(i)) == i);
  }
}

TEST_CASE("malformed specs and caps")
{
  CHECK_THROWS_AS(make_group("sym"), SpecError);
  CHECK_THROWS_AS(make_group("foo:3"), SpecError);
  CHECK_THROWS_AS(make_group("sym:-2"), SpecError);
  CHECK_THROWS_AS(make_group("sl2:6"), SpecError);
  CHECK_THROWS_AS(make_group("abelian:"), SpecError);
  Limits tight;
  tight.max_group_order = 100;
  try {
    make_group("sym:6", tight);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.cap() == "max_group_order");
    CHECK(e.requested() == 720);
  }
}

TEST_CASE("conjugation examples")
{
  const Permutation a = perm("(0 1 2)", 3);
  CHECK(conj(a, Permutation::identity(3)) == GroupElement(a));
  CHECK(conj(a, perm("(0 1)", 3)) == GroupElement(perm("(0 2 1)", 3)));
  // Same through the oracle's independent composition.
  CHECK(oracle::conj(to_oracle(a), to_oracle(perm("(0 1)", 3))) == to_oracle(perm("(0 2 1)", 3)));

  // y^-1 x y with x = [[1,0],[2,1]], y = [[1,2],[0,1]] over F_5.
  const oracle::Mat x{1, 0, 2, 1}, y{1, 2, 0, 1};
  const oracle::Mat want = oracle::mmul(oracle::mmul(oracle::minv(y, 5), x, 5), y, 5);
  CHECK(want == oracle::Mat{2, 2, 2, 0});
  CHECK(conj(mat(5, {1, 0, 2, 1}), mat(5, {1, 2, 0, 1})) == GroupElement(mat(5, {2, 2, 2, 0})));
}

TEST_CASE("mixed variants are type errors")
{
  CHECK_THROWS_AS(mul(perm("(0 1)", 3), mat(5, {1, 0, 0, 1})), TypeError);
  CHECK_THROWS_AS(mul(perm("(0 1)", 3), perm("(0 1)", 4)), TypeError);
  CHECK_THROWS_AS(mul(mat(5, {1, 0, 0, 1}), mat(7, {1, 0, 0, 1})), TypeError);
}

TEST_CASE("products agree with the oracle on all of Sym_4")
{
  const auto g = make_group("sym:4");
  for (Index i = 0; i < g->order(); ++i)
    for (Index j = 0; j < g->order(); ++j) {
      const auto& a = std::get<Permutation>(g->element(i));
      const auto& b = std::get<Permutation>(g->element(j));
      CHECK(to_oracle(std::get<Permutation>(g->element(g->mul(i, j)))) == oracle::mul(to_oracle(a), to_oracle(b)));
      CHECK(g->mul(i, g->inv(i)) == 0);
    }
}

TEST_CASE("cycle counts")
{
  CHECK(cycle_count(Permutation::identity(7)) == 7);
  CHECK(cycle_count(perm("(0 1 2 3 4)", 5)) == 1);
  CHECK(cycle_count(perm("(0 1)(2 3)", 5)) == 3);
  CHECK(cycle_count(GroupElement(perm("(0 1)(2 3)", 5))) == oracle::cycles(oracle::mul(oracle::cycle(5, {0, 1}), oracle::cycle(5, {2, 3}))));
  CHECK_THROWS_AS(cycle_count(GroupElement(mat(5, {1, 0, 0, 1}))), TypeError);
}

TEST_CASE("element orders and powers")
{
  CHECK(element_order(perm("(0 1 2)(3 4)", 5)) == 6);
  CHECK(element_order(mat(5, {1, 2, 0, 1})) == 5);
  CHECK(power(perm("(0 1 2)", 3), -1) == GroupElement(perm("(0 2 1)", 3)));
  CHECK(power(perm("(0 1 2)", 3), 3) == GroupElement(Permutation::identity(3)));
}

TEST_CASE("random elements")
{
  const auto trivial = make_group("cyclic:1");
  Rng r0(3);
  for (int i = 0; i < 10; ++i)
    CHECK(random_index(*trivial, r0) == 0);

  const auto g = make_group("sym:4");
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i)
    CHECK(random_index(*g, a) == random_index(*g, b));

  // 24 000 draws: every frequency within 5 binomial sigmas of 1000.
  Rng rng(2024);
  std::map<Index, int> freq;
  for (int i = 0; i < 24000; ++i)
    ++freq[random_index(*g, rng)];
  const double sigma = std::sqrt(24000.0 * (1.0 / 24) * (23.0 / 24));
  REQUIRE(freq.size() == 24);
  for (const auto& [x, f] : freq)
    CHECK(std::abs(f - 1000.0) <= 5 * sigma);
}

TEST_CASE("parse_element")
{
  const auto s4 = make_group("sym:4");
  CHECK(s4->element(parse_element(*s4, "(0 1)(2 3)")) == GroupElement(perm("(0 1)(2 3)", 4)));
  const auto a4 = make_group("alt:4");
  CHECK_THROWS(parse_element(*a4, "(0 1)"));
  const auto sl = make_group("sl2:5");
  CHECK(sl->element(parse_element(*sl, "[1,2,0,1]")) == GroupElement(mat(5, {1, 2, 0, 1})));
}
