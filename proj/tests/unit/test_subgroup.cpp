#include <doctest.h>

#include "acg/errors.hpp"
#include "acg/lattice.hpp"
#include "acg/subgroup.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

Index el(const GroupPtr& g, const char* text) { return parse_element(*g, text); }

oracle::Perm to_oracle(const GroupElement& e)
{
  const auto& p = std::get<Permutation>(e);
  return oracle::Perm(p.view().begin(), p.view().end());
}

std::set<oracle::Perm> oracle_group(const GroupPtr& g)
{
  std::set<oracle::Perm> out;
  for (const auto& e : g->elements())
    out.insert(to_oracle(e));
  return out;
}

} // namespace

TEST_CASE("closure examples")
{
  const auto s4 = make_group("sym:4");
  CHECK(closure(s4, {}).is_trivial());
  const Index gens[] = {el(s4, "(0 1)"), el(s4, "(0 1 2 3)")};
  CHECK(closure(s4, gens).size() == 24);
  const Index three[] = {el(s4, "(0 1 2)")};
  CHECK(closure(s4, three).size() == 3);
}

TEST_CASE("closure and normal closure agree with saturation on every pair of Sym_4 and Dih_6")
{
  for (const char* spec : {"sym:4", "dihedral:6"}) {
    const auto g = make_group(spec);
    const std::size_t n = g->permutation_degree();
    const auto whole = oracle_group(g);
    for (Index a = 0; a < g->order(); ++a)
      for (Index b = a; b < g->order(); ++b) {
        const Index seed[] = {a, b};
        const std::vector<oracle::Perm> os{to_oracle(g->element(a)), to_oracle(g->element(b))};
        CHECK(closure(g, seed).size() == oracle::closure(n, os).size());
        const Subgroup ncl = normal_closure(g, seed);
        const auto want = oracle::normal_closure(n, whole, os);
        REQUIRE(ncl.size() == want.size());
        for (Index m : ncl.members())
          CHECK(want.count(to_oracle(g->element(m))) == 1);
        CHECK(ncl.is_normal());
      }
  }
}

TEST_CASE("normal closure examples")
{
  const auto s4 = make_group("sym:4");
  const Index ids[] = {0, 0};
  CHECK(normal_closure(s4, ids).is_trivial());
  const Index v[] = {el(s4, "(0 1)(2 3)")};
  CHECK(normal_closure(s4, v).size() == 4);
  const auto s5 = make_group("sym:5");
  const Index c3[] = {el(s5, "(0 1 2)")};
  const Subgroup a5 = normal_closure(s5, c3);
  CHECK(a5.size() == 60);
  for (Index m : a5.members())
    CHECK(is_even(std::get<Permutation>(s5->element(m))));
}

TEST_CASE("derived subgroups")
{
  CHECK(derived_subgroup(make_group("abelian:3,3")).is_trivial());
  CHECK(derived_subgroup(make_group("sym:4")).size() == 12);
  CHECK(derived_subgroup(make_group("alt:5")).is_whole());
  CHECK(derived_subgroup(make_group("sl2:5")).is_whole());
  CHECK(is_soluble(make_group("sym:4")));
  CHECK_FALSE(is_soluble(make_group("alt:5")));
  CHECK(derived_series(make_group("sym:4")).size() == 4); // S4 > A4 > V4 > 1
}

TEST_CASE("abelianization")
{
  CHECK(abelianization(make_group("alt:5")).invariant_factors.empty());
  CHECK(abelianization(make_group("sym:4")).invariant_factors == std::vector<std::uint32_t>{2});
  CHECK(abelianization(make_group("abelian:2,4")).invariant_factors == std::vector<std::uint32_t>{2, 4});
  CHECK(abelianization(make_group("abelian:2,3")).invariant_factors == std::vector<std::uint32_t>{6});
  CHECK(abelianization(make_group("dihedral:6")).invariant_factors == std::vector<std::uint32_t>{2, 2});
  CHECK(abelianization(make_group("dihedral:5")).invariant_factors == std::vector<std::uint32_t>{2});
  CHECK(abelianization(make_group("sl2:3")).invariant_factors == std::vector<std::uint32_t>{3});

  // The projection is a homomorphism onto a group of order |G:[G,G]|.
  const auto g = make_group("dihedral:6");
  const auto ab = abelianization(g);
  CHECK(ab.group->order() == 4);
  for (Index a = 0; a < g->order(); ++a)
    for (Index b = 0; b < g->order(); ++b)
      CHECK(ab.projection_index[g->mul(a, b)] == ab.group->mul(ab.projection_index[a], ab.projection_index[b]));
}

TEST_CASE("quotients")
{
  const auto s4 = make_group("sym:4");
  const Index v[] = {el(s4, "(0 1)(2 3)")};
  const Quotient q = quotient(s4, normal_closure(s4, v));
  CHECK(q.group->order() == 6);
  for (Index a = 0; a < s4->order(); ++a)
    for (Index b = 0; b < s4->order(); ++b)
      CHECK(q.projection[s4->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  const Index t[] = {el(s4, "(0 1 2)")};
  CHECK_THROWS_AS(quotient(s4, closure(s4, t)), PreconditionError);
}

TEST_CASE("nd and nd_m")
{
  CHECK(nd_pair(make_group("cyclic:5")).nd == 1);
  CHECK(nd_pair(make_group("cyclic:5")).nd_m == 1);
  CHECK(nd_pair(make_group("sym:3")).nd == 1);
  CHECK(nd_pair(make_group("sym:3")).nd_m == 1);
  CHECK(nd_pair(make_group("abelian:2,2")).nd == 2);
  CHECK(nd_pair(make_group("abelian:2,2")).nd_m == 2);
  CHECK(nd_pair(make_group("cyclic:1")).nd == 0);
  CHECK(nd_pair(make_group("alt:5")).nd == 1);
  CHECK(nd_pair(make_group("alt:5")).nd_m == 1);
  // Z_6 = Z_2 x Z_3: a generator, or the pair of order-2 and order-3 elements.
  CHECK(nd_pair(make_group("cyclic:6")).nd == 1);
  CHECK(nd_pair(make_group("cyclic:6")).nd_m == 2);
  Limits tight;
  tight.max_nd_order = 10;
  CHECK_THROWS_AS(nd_pair(make_group("sym:4"), tight), ResourceError);
}

TEST_CASE("psi_k")
{
  CHECK(psi_k(make_group("cyclic:1"), 1) == 1);
  CHECK(psi_k(make_group("sym:3"), 1) == Rational(1, 2));
  // Pairs normally generating Sym_4, counted with the oracle.
  const auto s4 = make_group("sym:4");
  const auto whole = oracle_group(s4);
  std::size_t good = 0;
  for (Index a = 0; a < 24; ++a)
    for (Index b = 0; b < 24; ++b)
      good += oracle::normal_closure(4, whole, {to_oracle(s4->element(a)), to_oracle(s4->element(b))}).size() == 24;
  CHECK(normal_generating_tuple_count(s4, 2) == good);
  CHECK(psi_k(s4, 2) == Rational(static_cast<long long>(good), 576));
  CHECK(psi_k(s4, 2, {}, Exec::serial) == psi_k(s4, 2, {}, Exec::parallel));
  // psi_k(G) = psi_k(Ab(G)) for soluble G.
  for (const char* spec : {"sym:3", "sym:4", "dihedral:4", "dihedral:6", "abelian:2,4"}) {
    const auto g = make_group(spec);
    const auto ab = abelianization(g);
    for (int k = 1; k <= 2; ++k)
      CHECK(psi_k(g, k) == psi_k(ab.group, k));
  }
}

TEST_CASE("covering numbers of Alt_5 against class-product saturation")
{
  const auto g = make_group("alt:5");
  const auto cn = covering_numbers(*g);
  REQUIRE(cn.cn);
  CHECK(*cn.cn == 3);

  // Oracle: powers C^n as sets of permutations.
  const auto whole = oracle_group(g);
  std::vector<std::set<oracle::Perm>> classes;
  std::set<oracle::Perm> done{oracle::id(5)};
  for (const auto& x : whole) {
    if (done.count(x))
      continue;
    std::set<oracle::Perm> c;
    for (const auto& w : whole)
      c.insert(oracle::conj(x, w));
    done.insert(c.begin(), c.end());
    classes.push_back(c);
  }
  int worst = 0, best = 100;
  for (const auto& c : classes) {
    std::set<oracle::Perm> power = c;
    int n = 1;
    while (power.size() < whole.size()) {
      std::set<oracle::Perm> next;
      for (const auto& a : power)
        for (const auto& b : c)
          next.insert(oracle::mul(a, b));
      power = std::move(next);
      ++n;
    }
    worst = std::max(worst, n);
    best = std::min(best, n);
  }
  CHECK(*cn.cn == worst);
  REQUIRE(cn.ore);
  CHECK(*cn.ore == best);
  CHECK(*cn.ore <= *cn.cn);
  // Abelian groups: a class is a single element, so no power covers G.
  CHECK_FALSE(covering_numbers(*make_group("abelian:3,3")).cn);
}

TEST_CASE("conjugacy classes of Sym_4")
{
  const auto classes = conjugacy_classes(*make_group("sym:4"));
  REQUIRE(classes.size() == 5);
  CHECK(classes[0] == std::vector<Index>{0});
  std::vector<std::size_t> sizes;
  for (const auto& c : classes)
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("normal subgroups")
{
  CHECK(normal_subgroups(make_group("sym:4")).size() == 4);
  CHECK(normal_subgroups(make_group("alt:5")).size() == 2);
  CHECK(normal_subgroups(make_group("sl2:5")).size() == 3);
  CHECK(normal_subgroups(make_group("abelian:2,2")).size() == 5);
}

TEST_CASE("Mazurov lift")
{
  SUBCASE("trivial M returns g itself")
  {
    const auto g = make_group("sym:3");
    const Tuple t{{el(g, "(0 1)")}};
    const auto lift = mazurov_lift(g, Subgroup::trivial(g), t);
    REQUIRE(lift);
    CHECK(*lift == t);
  }
  SUBCASE("Sym_3 over Alt_3")
  {
    const auto g = make_group("sym:3");
    const Subgroup a3 = derived_subgroup(g);
    const Tuple t{{el(g, "(0 1)")}};
    const auto lift = mazurov_lift(g, a3, t);
    REQUIRE(lift);
    CHECK(normal_closure(g, lift->idx).is_whole());
  }
  SUBCASE("Sym_4 over the Klein subgroup: every eligible 1-tuple lifts")
  {
    const auto g = make_group("sym:4");
    const Index v[] = {el(g, "(0 1)(2 3)")};
    const Subgroup klein = normal_closure(g, v);
    const Quotient q = quotient(g, klein);
    int eligible = 0;
    for (Index x = 0; x < g->order(); ++x) {
      const Index img[] = {q.projection[x]};
      if (!normal_closure(q.group, img).is_whole())
        continue;
      ++eligible;
      const auto lift = mazurov_lift(g, klein, Tuple{{x}});
      REQUIRE(lift);
      CHECK(normal_closure(g, lift->idx).is_whole());
      // The witness differs from x by an element of M.
      CHECK(klein.contains(g->mul(g->inv(x), lift->idx[0])));
    }
    CHECK(eligible == 12); // transpositions and 4-cycles
  }
  SUBCASE("preconditions")
  {
    const auto g = make_group("sym:4");
    const Index t3[] = {el(g, "(0 1 2)")};
    CHECK_THROWS_AS(mazurov_lift(g, closure(g, t3), Tuple{{el(g, "(0 1)")}}), PreconditionError);
    // Image does not normally generate G/M.
    const Subgroup a4 = derived_subgroup(g);
    CHECK_THROWS_AS(mazurov_lift(g, a4, Tuple{{el(g, "(0 1 2)")}}), PreconditionError);
  }
}

TEST_CASE("closure lattice census: serial and parallel agree")
{
  for (const char* spec : {"sym:4", "abelian:3,3", "sl2:3"}) {
    const auto g = make_group(spec);
    std::vector<Index> alphabet;
    for (Index i = 0; i < g->order(); ++i)
      alphabet.push_back(i);
    for (auto kind : {ClosureLattice::Kind::subgroup, ClosureLattice::Kind::normal}) {
      const ClosureLattice lat(g, kind, alphabet, 2);
      const auto target = lat.find(alphabet);
      REQUIRE(target);
      std::vector<std::uint8_t> a, b;
      CHECK(census(lat, 2, *target, &a, Exec::serial) == census(lat, 2, *target, &b, Exec::parallel));
      CHECK(a == b);
    }
  }
}
