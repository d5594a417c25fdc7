#include "acg/report.hpp"

namespace acg {

json to_json(const RunManifest& m)
{
  return json{{"command", m.command},
              {"groupSpec", m.group_spec},
              {"parameters", m.parameters},
              {"seed", m.seed},
              {"outputPath", m.output_path}};
}

json to_json(const Rational& r)
{
  return to_string(r);
}

json to_json(const GroupElement& e)
{
  if (const auto* p = std::get_if<Permutation>(&e)) {
    json images = json::array();
    for (auto x : p->view())
      images.push_back(x);
    return json{{"permutation", images}, {"cycles", p->to_cycles()}};
  }
  if (const auto* m = std::get_if<MatrixGF>(&e))
    return json{{"entries", m->m}, {"modulus", m->p}};
  const auto& a = std::get<AbelianTuple>(e);
  json res = json::array();
  json mod = json::array();
  for (std::size_t i = 0; i < a.rank; ++i) {
    res.push_back(a.residues[i]);
    mod.push_back(a.moduli[i]);
  }
  return json{{"residues", res}, {"moduli", mod}};
}

json to_json(const FiniteGroup& g, const Tuple& t)
{
  json out = json::array();
  for (Index x : t.idx)
    out.push_back(to_json(g.element(x)));
  return out;
}

json to_json(const Subgroup& s)
{
  return json{{"ambient", s.ambient()->name()},
              {"order", s.size()},
              {"normal", s.is_normal()},
              {"members", std::vector<Index>(s.members().begin(), s.members().end())}};
}

json to_json(const FiniteGroup& g, const AbelianStructure& a)
{
  json images = json::array();
  for (Index s : g.generators())
    images.push_back(to_json(GroupElement(a.projection[s])));
  return json{{"invariantFactors", a.invariant_factors}, {"generatorImages", images}};
}

json to_json(const ChiSquaredReport& r)
{
  return json{{"statistic", r.statistic},
              {"dof", r.dof},
              {"critical95", r.critical},
              {"alpha", r.alpha},
              {"bins", r.bins},
              {"pass", r.pass}};
}

json to_json(const CycleDistribution& d)
{
  json support = json::object();
  for (const auto& [c, p] : d.support)
    support[std::to_string(c)] = to_json(p);
  return json{{"n", d.n}, {"parityFilter", d.parity == Parity::all ? "All" : "EvenOnly"}, {"support", support}};
}

json to_json(const MixingReport& r)
{
  return json{{"samples", r.samples},
              {"support", r.support},
              {"tvDistance", to_json(r.tv_distance)},
              {"chiSquared", json{{"stat", r.chi_squared}, {"dof", r.dof}, {"critical95", r.critical95},
                                  {"pass95", r.pass95}}},
              {"outside", r.outside}};
}

json to_json(const GraphHandle& h)
{
  json g{{"groupSpec", h.group()->name()},
         {"normalSubgroup", json{{"order", h.normal().size()}, {"whole", h.normal().is_whole()}}},
         {"k", h.k()},
         {"mode", to_string(h.mode().kind)}};
  if (h.mode().kind == GraphKind::restricted_ac) {
    json s = json::array();
    for (Index x : h.mode().conjugators)
      s.push_back(to_json(h.group()->element(x)));
    g["conjugators"] = s;
    g["symmetricConjugators"] = h.mode().symmetric_conjugators;
  }
  return g;
}

json to_json(const FiniteGroup& g, const ScanReport& r)
{
  json out{{"baseTuple", to_json(g, r.base)},
           {"image", to_json(g, r.image)},
           {"exponentMatrix", json{{"rows", r.exponents.rows}, {"det", r.exponents.det}}},
           {"imageIsVertex", r.image_is_vertex},
           {"sameComponent", r.same_component},
           {"distance", r.distance ? json(*r.distance) : json(nullptr)},
           {"componentCount", r.component_count},
           {"componentSizes", json{{"base", r.base_component_size}, {"image", r.image_component_size}}}};
  if (!r.geodesic.empty() || (r.distance && *r.distance == 0)) {
    json path = json::array();
    for (const auto& step : r.geodesic)
      path.push_back(step.move.to_string(g));
    out["geodesic"] = path;
  }
  return out;
}

json wrap_report(const RunManifest& m, const json& body)
{
  json out{{"manifest", to_json(m)}, {"version", kVersion}};
  for (auto it = body.begin(); it != body.end(); ++it)
    out[it.key()] = it.value();
  return out;
}

} // namespace acg
