#include <doctest.h>

#include "acg/errors.hpp"
#include "acg/graph.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

std::set<oracle::Perm> oracle_group(const GroupPtr& g)
{
  std::set<oracle::Perm> out;
  for (const auto& e : g->elements()) {
    const auto& p = std::get<Permutation>(e);
    out.insert(oracle::Perm(p.view().begin(), p.view().end()));
  }
  return out;
}

std::vector<std::size_t> sorted_sizes(const ComponentPartition& p)
{
  std::vector<std::size_t> s(p.sizes.begin(), p.sizes.end());
  std::sort(s.begin(), s.end());
  return s;
}

/// abelian:a,b realized on disjoint cycles, so the permutation oracle
/// can handle it.
std::set<oracle::Perm> abelian_as_perms(int a, int b)
{
  const std::size_t n = static_cast<std::size_t>(a + b);
  oracle::Perm x = oracle::id(n), y = oracle::id(n);
  for (int i = 0; i < a; ++i)
    x[i] = (i + 1) % a;
  for (int i = 0; i < b; ++i)
    y[a + i] = a + (i + 1) % b;
  return oracle::closure(n, {x, y});
}

} // namespace

TEST_CASE("vertex counts")
{
  CHECK(GraphHandle::delta(make_group("alt:5"), 2).vertex_count() == 3599);
  CHECK(GraphHandle::gamma(make_group("abelian:3,3"), 2).vertex_count() == 48);
  CHECK(GraphHandle::delta(make_group("cyclic:1"), 1).vertex_count() == 1);
  // SL_2(5) has centre {I, -I}: the four central pairs do not normally generate.
  CHECK(GraphHandle::delta(make_group("sl2:5"), 2).vertex_count() == 120 * 120 - 4);
}

TEST_CASE("graphs match the union-find oracle")
{
  struct Case
  {
    const char* spec;
    int k;
    GraphKind kind;
    oracle::Moves moves;
  };
  const Case cases[] = {
    {"sym:3", 2, GraphKind::full_ac, oracle::Moves::ac},
    {"sym:4", 2, GraphKind::full_ac, oracle::Moves::ac},
    {"dihedral:4", 2, GraphKind::full_ac, oracle::Moves::ac},
    {"alt:4", 2, GraphKind::full_ac, oracle::Moves::ac},
    {"dihedral:6", 2, GraphKind::full_ac, oracle::Moves::ac},
    {"sym:4", 1, GraphKind::full_ac, oracle::Moves::ac},
    {"sym:3", 2, GraphKind::nielsen, oracle::Moves::nielsen},
    {"sym:4", 2, GraphKind::nielsen, oracle::Moves::nielsen},
    {"dihedral:4", 2, GraphKind::extended_nielsen, oracle::Moves::extended},
    {"alt:4", 2, GraphKind::extended_nielsen, oracle::Moves::extended},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec);
    CAPTURE(c.k);
    const auto g = make_group(c.spec);
    GraphMode mode = c.kind == GraphKind::full_ac    ? GraphMode::full()
                     : c.kind == GraphKind::nielsen ? GraphMode::nielsen()
                                                    : GraphMode::extended_nielsen();
    const GraphHandle h(g, Subgroup::whole(g), c.k, mode);
    const auto want = oracle::graph_census(g->permutation_degree(), oracle_group(g), c.k, c.moves);
    CHECK(h.vertex_count() == want.vertices);
    CHECK(sorted_sizes(components(h)) == want.sizes);
  }
}

TEST_CASE("Diaconis-Graham and Neumann-Neumann on the oracle")
{
  // Gamma_2(Z_3 x Z_3): phi(3) = 2 components of 24.
  const auto z33 = oracle::graph_census(6, abelian_as_perms(3, 3), 2, oracle::Moves::nielsen);
  CHECK(z33.vertices == 48);
  CHECK(z33.sizes == std::vector<std::size_t>{24, 24});
  const auto p = components(GraphHandle::gamma(make_group("abelian:3,3"), 2));
  CHECK(sorted_sizes(p) == z33.sizes);

  // Gamma~_2(Z_2 x Z_2) is connected.
  CHECK(components(GraphHandle::gamma_extended(make_group("abelian:2,2"), 2)).count() == 1);
  CHECK(oracle::graph_census(4, abelian_as_perms(2, 2), 2, oracle::Moves::extended).sizes.size() == 1);
}

TEST_CASE("move closure and undirected edges")
{
  for (const char* spec : {"sym:3", "dihedral:4", "abelian:2,4", "sl2:3"}) {
    const auto g = make_group(spec);
    for (const GraphHandle& h :
         {GraphHandle::delta(g, 2), GraphHandle::restricted(g, Subgroup::whole(g), 2, true),
          GraphHandle::gamma(g, 2), GraphHandle::gamma_extended(g, 2)}) {
      for (Code c : h.vertex_codes()) {
        const auto out = h.neighbor_codes(c);
        for (Code d : out) {
          REQUIRE(h.is_vertex(d));
          const auto back = h.neighbor_codes(d);
          CHECK(std::binary_search(back.begin(), back.end(), c));
        }
        CHECK(h.encode(h.decode(c)) == c);
      }
    }
  }
}

TEST_CASE("components: serial and parallel agree, numbering by smallest code")
{
  for (const char* spec : {"sym:4", "abelian:3,3", "sl2:3", "dihedral:6"}) {
    const auto g = make_group(spec);
    for (const GraphHandle& h : {GraphHandle::delta(g, 2), GraphHandle::gamma(g, 2)}) {
      const auto s = components(h, Exec::serial);
      const auto p = components(h, Exec::parallel);
      CHECK(s.labels == p.labels);
      CHECK(s.sizes == p.sizes);
      CHECK(s.representatives == p.representatives);
      for (std::size_t i = 1; i < s.representatives.size(); ++i)
        CHECK(s.representatives[i - 1] < s.representatives[i]);
    }
  }
}

TEST_CASE("simple groups give connected Delta_2")
{
  CHECK(components(GraphHandle::delta(make_group("alt:5"), 2)).count() == 1);
  CHECK(components(GraphHandle::delta(make_group("sl2:5"), 2)).count() == 1);
}

TEST_CASE("distances")
{
  const auto g = make_group("sym:4");
  const GraphHandle h = GraphHandle::delta(g, 2);
  const Tuple v{{parse_element(*g, "(0 1)"), parse_element(*g, "(0 1 2 3)")}};
  CHECK(distance(h, v, v).distance == 0);

  const Tuple w{{parse_element(*g, "(0 1)"), parse_element(*g, "(0 2 1 3)")}};
  const auto d = distance(h, v, w, true);
  REQUIRE(d.distance);
  CHECK(d.path.size() == static_cast<std::size_t>(*d.distance));
  // Walking the path reproduces the endpoint, and every hop is an edge.
  Code at = h.encode(v);
  for (const auto& step : d.path) {
    const auto nb = h.neighbor_codes(at);
    CHECK(std::binary_search(nb.begin(), nb.end(), step.to));
    at = step.to;
  }
  CHECK(at == h.encode(w));
  CHECK(bfs_distances(h, h.encode(v))[h.encode(w)] == *d.distance);

  const Tuple bad{{0, 0}};
  CHECK_THROWS_AS(distance(h, v, bad), PreconditionError);

  // Different components: no distance.
  const auto z = make_group("abelian:3,3");
  const GraphHandle gz = GraphHandle::gamma(z, 2);
  const auto parts = components(gz);
  REQUIRE(parts.count() == 2);
  CHECK_FALSE(distance(gz, gz.decode(parts.representatives[0]), gz.decode(parts.representatives[1])).distance);
}

TEST_CASE("diameter")
{
  const auto g = make_group("sym:3");
  const GraphHandle h = GraphHandle::delta(g, 2);
  const auto codes = h.vertex_codes();
  // Oracle: maximum over all-pairs BFS.
  std::int32_t want = 0;
  for (Code c : codes)
    for (std::int32_t d : bfs_distances(h, c))
      want = std::max(want, d);
  const auto exact = diameter(h, codes.front(), {true, Exec::serial});
  CHECK(exact.value == want);
  CHECK(exact.exact);
  CHECK(diameter(h, codes.front(), {true, Exec::parallel}).value == want);
  const auto est = diameter(h, codes.front(), {false});
  CHECK(est.value <= want);

  const auto ecc_s = eccentricities(h, codes, Exec::serial);
  CHECK(ecc_s == eccentricities(h, codes, Exec::parallel));
  CHECK(*std::max_element(ecc_s.begin(), ecc_s.end()) == want);

  const auto one = GraphHandle::delta(make_group("cyclic:1"), 1);
  CHECK(diameter(one, one.vertex_codes().front()).value == 0);
}

TEST_CASE("restricted and full graphs share components")
{
  for (const char* spec : {"sym:4", "sl2:5"}) {
    const auto g = make_group(spec);
    const auto full = components(GraphHandle::delta(g, 2));
    for (bool sym : {true, false}) {
      const auto r = components(GraphHandle::restricted(g, Subgroup::whole(g), 2, sym));
      CHECK(r.labels == full.labels);
    }
  }
}

TEST_CASE("Cayley diameter")
{
  const auto g = make_group("sym:4");
  const auto gens = g->generators();
  CHECK(cayley_diameter(*g, gens) > 0);
  const auto c = make_group("cyclic:6");
  CHECK(cayley_diameter(*c, c->generators()) == 3);
}

TEST_CASE("cover check")
{
  SUBCASE("trivial M")
  {
    const auto g = make_group("sym:3");
    const auto r = cover_check(g, Subgroup::trivial(g), 2);
    CHECK(r.surjective);
    CHECK(r.source_vertices == r.quotient_vertices);
  }
  SUBCASE("Sym_3 over Alt_3, k = 1")
  {
    const auto g = make_group("sym:3");
    const auto r = cover_check(g, derived_subgroup(g), 1);
    CHECK(r.surjective);
    CHECK(r.quotient_vertices == 1);
    CHECK(r.source_vertices == 3);
  }
  SUBCASE("Sym_4 over the Klein subgroup, k = 2")
  {
    const auto g = make_group("sym:4");
    const Index v[] = {parse_element(*g, "(0 1)(2 3)")};
    const auto r = cover_check(g, normal_closure(g, v), 2);
    CHECK(r.surjective);
    CHECK(r.images_are_vertices);
    CHECK(r.components_respected);
  }
}

TEST_CASE("soluble component correspondence")
{
  for (const char* spec : {"sym:3", "sym:4", "dihedral:4", "dihedral:6", "abelian:3,3"}) {
    CAPTURE(spec);
    const auto r = soluble_component_check(make_group(spec), 2);
    CHECK(r.projection_lands_in_vertices);
    CHECK(r.components_respected);
    CHECK(r.bijective);
    CHECK(r.group_components == r.abelian_components);
  }
  CHECK(soluble_component_check(make_group("sym:3"), 2).group_components == 1);
  CHECK_THROWS_AS(soluble_component_check(make_group("alt:5"), 2), PreconditionError);
}

TEST_CASE("graph construction errors")
{
  const auto g = make_group("sym:4");
  const Index t[] = {parse_element(*g, "(0 1 2)")};
  CHECK_THROWS_AS(GraphHandle(g, closure(g, t), 2, GraphMode::full()), PreconditionError);
  CHECK_THROWS_AS(GraphHandle(g, Subgroup::whole(g), 0, GraphMode::full()), PreconditionError);
  CHECK_THROWS_AS(GraphHandle(g, derived_subgroup(g), 2, GraphMode::nielsen()), PreconditionError);
  Limits tight;
  tight.max_vertex_codes = 100;
  CHECK_THROWS_AS(GraphHandle::delta(g, 2, tight), ResourceError);
  CHECK_THROWS_AS(parse_graph_kind("bogus"), SpecError);
}

TEST_CASE("Delta_k over a proper normal subgroup")
{
  const auto g = make_group("sym:4");
  const Subgroup a4 = derived_subgroup(g);
  const GraphHandle h = GraphHandle::delta(g, a4, 2);
  // Brute force: pairs of A_4 whose normal closure in S_4 is A_4.
  std::uint64_t want = 0;
  for (Index a : a4.members())
    for (Index b : a4.members()) {
      const Index seed[] = {a, b};
      want += normal_closure(g, seed) == a4;
    }
  CHECK(h.vertex_count() == want);
  for (Code c : h.vertex_codes())
    CHECK(normal_closure(g, h.decode(c).idx) == a4);
}
