#include <doctest.h>

#include "acg/errors.hpp"
#include "acg/words.hpp"
#include "oracles.hpp"

using namespace acg;

namespace {

GroupElement mat(std::uint32_t p, const oracle::Mat& m) { return MatrixGF::from_entries(p, m); }

} // namespace

TEST_CASE("word parsing and reduction")
{
  CHECK(Word::parse("xxxYYYY") == Word::parse("x^3 y^-4"));
  CHECK(Word::parse("x^3 y^-4").letters == std::vector<int>{1, 1, 1, -2, -2, -2, -2});
  CHECK(Word::parse("1").length() == 0);
  CHECK(Word::parse("").length() == 0);
  CHECK(Word::parse("xX").length() == 0);
  CHECK(Word::parse("x*y.X").to_string() == "x y x^-1");
  CHECK(Word::parse("xX", "xy", false).length() == 2);
  CHECK_FALSE(Word::parse("xX", "xy", false).is_reduced());
  CHECK(Word::parse("xX", "xy", false).reduce().length() == 0);
  CHECK(Word::parse("x^-2").to_string() == "x^-2");
  CHECK(Word::parse("1").to_string() == "1");
  CHECK(Word::parse("abA", "ab").exponent_sum(0) == 0);
  CHECK_THROWS_AS(Word::parse("xz"), SpecError);
  CHECK_THROWS_AS(Word::parse("x^"), SpecError);
  CHECK_THROWS_AS(Word::parse("^2"), SpecError);
  CHECK((Word::parse("xy") * Word::parse("Yx")) == Word::parse("x^2"));
}

TEST_CASE("evaluation")
{
  const std::uint32_t p = 5;
  const oracle::Mat x{1, 0, 2, 1}, y{1, 2, 0, 1};
  const GroupElement images[] = {mat(p, x), mat(p, y)};
  CHECK(is_identity(eval_word(Word::parse("1"), images)));
  CHECK(is_identity(eval_word(Word::parse("xX", "xy", false), images)));

  const oracle::Mat u = oracle::mmul(oracle::mpow(x, 3, p), oracle::mpow(y, -4, p), p);
  CHECK(u == oracle::Mat{1, 2, 1, 3});
  CHECK(eval_word(ak_pair().u, images) == mat(p, u));
  // v = x y x y^-1 x^-1 y^-1 is the identity for these transvections.
  oracle::Mat v{1, 0, 0, 1};
  for (const auto& [m, e] : std::vector<std::pair<oracle::Mat, int>>{{x, 1}, {y, 1}, {x, 1}, {y, -1}, {x, -1}, {y, -1}})
    v = oracle::mmul(v, oracle::mpow(m, e, p), p);
  CHECK(v == oracle::Mat{1, 0, 0, 1});
  CHECK(eval_word(ak_pair().v, images) == mat(p, v));

  const GroupElement only_x[] = {mat(p, x)};
  CHECK_THROWS_AS(eval_word(Word::parse("y"), only_x), PreconditionError);

  const auto g = make_group("sl2:5");
  const Index idx[] = {g->index_of(images[0]), g->index_of(images[1])};
  CHECK(g->element(eval_word(*g, ak_pair().u, idx)) == mat(p, u));
}

TEST_CASE("exponent matrices")
{
  const auto id = exponent_matrix(identity_pair());
  CHECK(id.rows[0] == std::array<std::int64_t, 2>{1, 0});
  CHECK(id.rows[1] == std::array<std::int64_t, 2>{0, 1});
  CHECK(id.det == 1);

  const auto ak = exponent_matrix(ak_pair());
  CHECK(ak.rows[0] == std::array<std::int64_t, 2>{3, -4});
  CHECK(ak.rows[1] == std::array<std::int64_t, 2>{1, -1});
  CHECK(ak.det == 1);

  const auto xx = exponent_matrix({Word::parse("x"), Word::parse("x")});
  CHECK(xx.det == 0);
  CHECK_FALSE(xx.unimodular());
  CHECK_THROWS_AS(exponent_matrix({Word::parse("abc", "abc"), Word::parse("a", "abc")}), PreconditionError);
}

TEST_CASE("pair maps")
{
  const auto g = make_group("sl2:5");
  const Tuple t = base_tuple(*g, 2);
  CHECK(apply_pair_map(identity_pair(), t, *g) == t);
  const Tuple swapped = apply_pair_map({Word::parse("y"), Word::parse("x")}, t, *g);
  CHECK(swapped[0] == t[1]);
  CHECK(swapped[1] == t[0]);
  const Tuple ak = apply_pair_map(ak_pair(), t, *g);
  CHECK(g->element(ak[0]) == mat(5, {1, 2, 1, 3}));
  CHECK(ak[1] == 0);
  CHECK_THROWS_AS(apply_pair_map(ak_pair(), Tuple{{1}}, *g), PreconditionError);
}

TEST_CASE("scans")
{
  const auto g = make_group("sl2:5");
  const GraphHandle full = scan_graph(g, GraphKind::full_ac, 2, true, {});
  const Tuple t = base_tuple(*g, 2);

  const ScanReport same = scan_quotient(full, t, identity_pair());
  CHECK(same.same_component);
  CHECK(same.distance == 0);
  CHECK(same.geodesic.empty());

  const ScanReport ak = scan_quotient(full, t, ak_pair());
  CHECK(ak.image_is_vertex);
  CHECK(ak.same_component);
  REQUIRE(ak.distance);
  CHECK(ak.geodesic.size() == static_cast<std::size_t>(*ak.distance));
  CHECK(ak.component_count == 1);
  Code at = full.encode(t);
  for (const auto& step : ak.geodesic) {
    const auto nb = full.neighbor_codes(at);
    CHECK(std::binary_search(nb.begin(), nb.end(), step.to));
    at = step.to;
  }
  CHECK(at == full.encode(ak.image));

  const GraphHandle restricted = scan_graph(g, GraphKind::restricted_ac, 2, true, {});
  const ScanReport r = scan_quotient(restricted, t, ak_pair(), false);
  CHECK(r.same_component);
  REQUIRE(r.distance);
  CHECK(*r.distance >= *ak.distance);
  CHECK(r.geodesic.empty());

  CHECK_THROWS_AS(scan_quotient(full, t, {Word::parse("x"), Word::parse("x")}), PreconditionError);
  CHECK_THROWS_AS(scan_quotient(full, Tuple{{0, 0}}, ak_pair()), PreconditionError);
}

TEST_CASE("distance series")
{
  const auto trivial = distance_series({"cyclic:1"}, ak_pair(), GraphKind::full_ac);
  REQUIRE(trivial.size() == 1);
  REQUIRE(trivial[0].scan);
  CHECK(trivial[0].scan->distance == 0);

  for (const auto& row : distance_series({"sl2:3", "sl2:5"}, identity_pair(), GraphKind::full_ac)) {
    REQUIRE(row.scan);
    CHECK(row.scan->distance == 0);
  }

  const auto rows = distance_series({"sl2:3", "sl2:5", "sl2:7"}, ak_pair(), GraphKind::restricted_ac);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].order == 24);
  CHECK(rows[2].order == 336);
  for (const auto& row : rows) {
    REQUIRE(row.scan);
    CHECK(row.scan->same_component);
    CHECK(row.scan->distance.has_value());
  }

  Limits tight;
  tight.max_vertex_codes = 1000;
  const auto capped = distance_series({"sl2:3", "sl2:7"}, ak_pair(), GraphKind::full_ac, true, tight);
  CHECK(capped[0].scan.has_value());
  CHECK_FALSE(capped[1].scan.has_value());
  CHECK(capped[1].error.find("max_vertex_codes") != std::string::npos);
}

TEST_CASE("base tuples")
{
  const auto g = make_group("cyclic:5");
  const Tuple t = base_tuple(*g, 2);
  CHECK(t[0] == g->generators()[0]);
  CHECK(t[1] == 0);
  CHECK_THROWS_AS(base_tuple(*make_group("abelian:2,2,2"), 2), PreconditionError);
}
