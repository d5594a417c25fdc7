#include <doctest.h>

#include "acg/report.hpp"

using namespace acg;

TEST_CASE("element and rational serialization")
{
  CHECK(to_json(Rational(11, 24)) == "11/24");
  CHECK(to_json(Rational(2)) == "2");
  const json p = to_json(GroupElement(Permutation::from_cycles("(0 1 2)", 4)));
  CHECK(p["permutation"] == json::array({1, 2, 0, 3}));
  CHECK(p["cycles"] == "(0 1 2)");
  const json m = to_json(GroupElement(MatrixGF::from_entries(5, {1, 2, 0, 1})));
  CHECK(m["entries"] == json::array({1, 2, 0, 1}));
  CHECK(m["modulus"] == 5);
  const std::uint32_t moduli[] = {2, 4};
  const std::int64_t residues[] = {1, 3};
  const json a = to_json(GroupElement(AbelianTuple::from_residues(moduli, residues)));
  CHECK(a["residues"] == json::array({1, 3}));
  CHECK(a["moduli"] == json::array({2, 4}));
}

TEST_CASE("reports embed the manifest and version")
{
  RunManifest m;
  m.command = "analyze";
  m.group_spec = "alt:5";
  m.parameters = json{{"k", 2}};
  m.seed = 7;
  const json r = wrap_report(m, json{{"vertexCount", 3599}});
  const std::string text = r.dump();
  CHECK(text.find("\"manifest\"") < text.find("\"version\""));
  CHECK(r["manifest"]["command"] == "analyze");
  CHECK(r["manifest"]["groupSpec"] == "alt:5");
  CHECK(r["manifest"]["parameters"]["k"] == 2);
  CHECK(r["manifest"]["seed"] == 7);
  CHECK(r["version"] == kVersion);
  CHECK(r["vertexCount"] == 3599);
  CHECK(wrap_report(m, json{{"vertexCount", 3599}}).dump() == text);
}

TEST_CASE("graph, subgroup and scan reports")
{
  const auto g = make_group("sl2:5");
  const GraphHandle h = GraphHandle::restricted(g, Subgroup::whole(g), 2, false);
  const json gj = to_json(h);
  CHECK(gj["mode"] == "restricted-ac");
  CHECK(gj["symmetricConjugators"] == false);
  CHECK(gj["conjugators"].size() == 2);
  CHECK(gj["normalSubgroup"]["order"] == 120);

  const json sj = to_json(derived_subgroup(make_group("sym:4")));
  CHECK(sj["order"] == 12);
  CHECK(sj["normal"] == true);

  const json ab = to_json(*make_group("sym:4"), abelianization(make_group("sym:4")));
  CHECK(ab["invariantFactors"] == json::array({2}));

  const GraphHandle full = GraphHandle::delta(g, 2);
  const json scan = to_json(*g, scan_quotient(full, base_tuple(*g, 2), ak_pair()));
  CHECK(scan["exponentMatrix"]["det"] == 1);
  CHECK(scan["sameComponent"] == true);
  CHECK(scan["geodesic"].size() == scan["distance"].get<std::size_t>());
}

TEST_CASE("statistics reports")
{
  const json d = to_json(cycle_distribution(4, Parity::even_only));
  CHECK(d["parityFilter"] == "EvenOnly");
  CHECK(d["support"]["2"] == "11/12");
  const json c = to_json(chi_squared_test({{0, 100}}, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
  CHECK(c["pass"] == false);
  CHECK(c["dof"] == 1);
}
