// acg: command-line front end. Every run is seeded and writes one report
// (JSON by default, CSV for tabular outputs) to stdout or --out.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "acg/errors.hpp"
#include "acg/graph.hpp"
#include "acg/report.hpp"
#include "acg/stats.hpp"
#include "acg/verify.hpp"
#include "acg/walkers.hpp"
#include "acg/words.hpp"

namespace {

using namespace acg;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitResource = 3;

struct Common
{
  std::string group = "alt:5";
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "json";
  std::string out;
};

struct Output
{
  json report;
  std::string csv;
  int code = kExitOk;
};

std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep))
    parts.push_back(cur);
  if (!text.empty() && text.back() == sep)
    parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

/// Components separated by ';', padded with identities to length k.
Tuple parse_tuple(const FiniteGroup& g, const std::string& text, int k)
{
  Tuple t;
  if (!trim(text).empty())
    for (const auto& part : split(text, ';'))
      t.idx.push_back(parse_element(g, trim(part)));
  if (static_cast<int>(t.size()) > k)
    throw SpecError("tuple '" + text + "' has more than k = " + std::to_string(k) + " components");
  t.idx.resize(static_cast<std::size_t>(k), 0);
  return t;
}

/// whole | derived | trivial | ncl:<tuple>
Subgroup resolve_normal(const GroupPtr& g, const std::string& text)
{
  if (text == "whole")
    return Subgroup::whole(g);
  if (text == "derived")
    return derived_subgroup(g);
  if (text == "trivial")
    return Subgroup::trivial(g);
  if (text.rfind("ncl:", 0) == 0) {
    const std::string body = text.substr(4);
    const auto parts = split(body, ';');
    return normal_closure(g, parse_tuple(*g, body, static_cast<int>(parts.size())).idx);
  }
  throw SpecError("--normal must be whole, derived, trivial or ncl:<elements>, got '" + text + "'");
}

std::string csv_escape(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string tuple_text(const FiniteGroup& g, const Tuple& t)
{
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? ";" : "") + to_string(g.element(t.idx[i]));
  return s;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs
{
  int k = 2;
  std::string mode = "full-ac";
  std::string normal = "whole";
  bool directed = false;
  std::string diameter = "off";
  std::string from;
  std::string to;
  bool membership = false;
};

Output run_analyze(const Common& c, const AnalyzeArgs& a, RunManifest& m, const Limits& limits)
{
  const GroupPtr g = make_group(c.group, limits);
  const GraphKind kind = parse_graph_kind(a.mode);
  const bool gamma = kind == GraphKind::nielsen || kind == GraphKind::extended_nielsen;
  if (gamma && a.normal != "whole")
    throw SpecError("--normal applies to AC modes only");
  const Subgroup n = resolve_normal(g, a.normal);
  GraphMode mode;
  switch (kind) {
  case GraphKind::full_ac:
    mode = GraphMode::full();
    break;
  case GraphKind::restricted_ac:
    mode = GraphMode::restricted(std::vector<Index>(g->generators().begin(), g->generators().end()), !a.directed);
    break;
  case GraphKind::nielsen:
    mode = GraphMode::nielsen();
    break;
  case GraphKind::extended_nielsen:
    mode = GraphMode::extended_nielsen();
    break;
  }
  if (a.diameter != "off" && a.diameter != "exact" && a.diameter != "estimate")
    throw SpecError("--diameter must be off, exact or estimate");
  m.parameters = json{{"k", a.k},        {"mode", a.mode},           {"normal", a.normal},
                      {"directed", a.directed}, {"diameter", a.diameter}, {"from", a.from},
                      {"to", a.to},      {"membership", a.membership}};

  const GraphHandle h(g, n, a.k, mode, limits);
  const ComponentPartition parts = components(h);

  json comps = json::array();
  std::ostringstream csv;
  csv << "component,size,sampleVertex\n";
  for (std::size_t i = 0; i < parts.count(); ++i) {
    const Tuple rep = h.decode(parts.representatives[i]);
    json entry{{"size", parts.sizes[i]}, {"sampleVertex", to_json(*g, rep)}};
    csv << i << ',' << parts.sizes[i] << ',' << csv_escape(tuple_text(*g, rep)) << '\n';
    if (a.diameter != "off") {
      const DiameterResult d = diameter(h, parts.representatives[i], {a.diameter == "exact"});
      entry["diameter"] = json{{"value", d.value}, {"exact", d.exact}, {"sweeps", d.sweeps}};
    }
    comps.push_back(entry);
  }
  Output out;
  out.report = json{{"graph", to_json(h)},
                    {"group", json{{"order", g->order()}, {"normalOrder", n.size()}}},
                    {"codeSpace", h.code_space()},
                    {"vertexCount", h.vertex_count()},
                    {"componentCount", parts.count()},
                    {"components", comps}};
  if (!a.from.empty() || !a.to.empty()) {
    const Tuple u = parse_tuple(*g, a.from, a.k);
    const Tuple v = parse_tuple(*g, a.to, a.k);
    const DistanceResult d = distance(h, u, v, true);
    json path = json::array();
    for (const auto& step : d.path)
      path.push_back(json{{"move", step.move.to_string(*g)}, {"to", to_json(*g, h.decode(step.to))}});
    out.report["distances"] = json::array(
      {json{{"from", to_json(*g, u)}, {"to", to_json(*g, v)},
            {"distance", d.distance ? json(*d.distance) : json(nullptr)}, {"path", path}}});
  }
  if (a.membership) {
    csv.str("");
    csv << "vertex,component\n";
    for (Code code : h.vertex_codes())
      csv << csv_escape(tuple_text(*g, h.decode(code))) << ',' << parts.labels[code] << '\n';
  }
  out.csv = csv.str();
  return out;
}

// -------------------------------------------------------------------- walk

struct WalkArgs
{
  std::string kind = "acr";
  int k = 2;
  std::string normal = "whole";
  std::string init;
  std::string budget = "auto";
  std::uint64_t samples = 10000;
  bool cumulative = false;
  std::string conjugators = "uniform";
  double conjugated_probability = 0.5;
  bool full_moves = false;
};

struct WalkTarget
{
  WalkGroup group;
  Membership in_n;
  BigInt n_order = 1;
  std::optional<Subgroup> enumerated_n;
  std::optional<Parity> cycle_parity;
};

BigInt factorial(std::size_t n)
{
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

WalkTarget resolve_walk_target(const std::string& spec_text, const std::string& normal, const Limits& limits)
{
  const GroupSpec spec = GroupSpec::parse(spec_text);
  const bool structural_sym = spec.kind == GroupSpec::Kind::sym && spec.n >= 2 &&
                              (normal == "whole" || normal == "derived");
  const bool structural_alt = spec.kind == GroupSpec::Kind::alt && spec.n >= 5 &&
                              (normal == "whole" || normal == "derived");
  WalkTarget t;
  if (structural_sym || structural_alt) {
    t.group = WalkGroup::from_spec(spec, limits);
    const bool alt_target = structural_alt || normal == "derived";
    t.cycle_parity = alt_target ? Parity::even_only : Parity::all;
    t.n_order = alt_target ? factorial(spec.n) / 2 : factorial(spec.n);
    if (alt_target)
      t.in_n = [](const GroupElement& x) { return is_even(std::get<Permutation>(x)); };
    else
      t.in_n = [](const GroupElement&) { return true; };
    return t;
  }
  const GroupPtr g = make_group(spec_text, limits);
  t.group = WalkGroup::enumerated(g);
  Subgroup n = resolve_normal(g, normal);
  t.n_order = n.size();
  if (const std::size_t d = g->permutation_degree(); d >= 2) {
    if (BigInt(n.size()) == factorial(d))
      t.cycle_parity = Parity::all;
    else if (BigInt(n.size()) * 2 == factorial(d))
      t.cycle_parity = Parity::even_only;
  }
  t.in_n = [g, n](const GroupElement& x) {
    const auto i = g->find(x);
    return i && n.contains(*i);
  };
  t.enumerated_n = std::move(n);
  return t;
}

Output run_walk(const Common& c, const WalkArgs& a, RunManifest& m, const Limits& limits)
{
  WalkTarget target = resolve_walk_target(c.group, a.normal, limits);
  const WalkGroup& wg = target.group;

  WalkConfig cfg;
  if (a.kind == "acr")
    cfg.kind = WalkKind::acr;
  else if (a.kind == "pra")
    cfg.kind = WalkKind::pra;
  else
    throw SpecError("--kind must be acr or pra");
  if (cfg.kind == WalkKind::pra && a.normal != "whole")
    throw SpecError("product replacement walks target the whole group (--normal whole)");
  cfg.k = a.k;
  cfg.cumulative = a.cumulative;
  cfg.conjugated_probability = a.conjugated_probability;
  cfg.full_move_set = a.full_moves;
  if (a.conjugators == "uniform") {
    cfg.conjugators = {ConjugatorSource::Kind::uniform, 0};
  } else if (a.conjugators.rfind("word:", 0) == 0) {
    const int len = std::stoi(a.conjugators.substr(5));
    if (len < 1)
      throw SpecError("word conjugator length must be >= 1");
    cfg.conjugators = {ConjugatorSource::Kind::random_word, len};
  } else {
    throw SpecError("--conjugators must be uniform or word:L");
  }
  if (a.conjugated_probability < 0 || a.conjugated_probability > 1)
    throw SpecError("--conj-prob must lie in [0, 1]");

  std::vector<GroupElement> init;
  if (!trim(a.init).empty())
    for (const auto& part : split(a.init, ';'))
      init.push_back(wg.parse(trim(part)));
  if (static_cast<int>(init.size()) > a.k)
    throw SpecError("--init has more than k components");
  while (static_cast<int>(init.size()) < a.k)
    init.push_back(wg.identity());
  for (const auto& x : init)
    if (cfg.kind == WalkKind::acr && !target.in_n(x))
      throw PreconditionError("initial component " + to_string(x) + " is not in N");
  if (target.enumerated_n) {
    const GroupPtr& g = wg.group();
    Tuple t;
    for (const auto& x : init)
      t.idx.push_back(g->index_of(x));
    if (cfg.kind == WalkKind::acr && !(normal_closure(g, t.idx) == *target.enumerated_n))
      throw PreconditionError("initial tuple does not normally generate N");
    if (cfg.kind == WalkKind::pra && !closure(g, t.idx).is_whole())
      throw PreconditionError("initial tuple does not generate G");
  }

  const bool auto_budget = a.budget == "auto";
  if (auto_budget) {
    const std::uint64_t n_small = target.n_order > BigInt(UINT64_MAX) ? UINT64_MAX
                                                                      : target.n_order.convert_to<std::uint64_t>();
    cfg.budget = default_budget(a.k, wg.degree(), n_small);
    std::cerr << "budget auto -> " << cfg.budget << "\n";
  } else {
    cfg.budget = std::stoull(a.budget);
  }

  json init_json = json::array();
  for (const auto& x : init)
    init_json.push_back(to_json(x));
  json config{{"kind", a.kind},
              {"k", cfg.k},
              {"budget", cfg.budget},
              {"budgetAuto", auto_budget},
              {"cumulative", cfg.cumulative},
              {"conjugators", json{{"kind", cfg.conjugators.kind == ConjugatorSource::Kind::uniform ? "uniform"
                                                                                                    : "random-word"},
                                   {"length", cfg.conjugators.length}}},
              {"conjugatedProbability", cfg.conjugated_probability},
              {"fullMoveSet", cfg.full_move_set},
              {"normal", a.normal},
              {"normalOrder", target.n_order.str()},
              {"samples", a.samples},
              {"init", init_json}};
  m.parameters = config;

  if (a.samples == 0)
    throw SpecError("--samples must be positive");
  const std::vector<GroupElement> samples = sample_batch(wg, init, cfg, a.samples, c.seed);

  std::map<GroupElement, std::uint64_t, bool (*)(const GroupElement&, const GroupElement&)> hist(
    [](const GroupElement& x, const GroupElement& y) { return payload_compare(x, y) < 0; });
  std::uint64_t outside = 0;
  for (const auto& s : samples) {
    if (!target.in_n(s))
      ++outside;
    ++hist[s];
  }
  std::vector<std::uint64_t> counts;
  for (const auto& [x, cnt] : hist)
    if (target.in_n(x))
      counts.push_back(cnt);

  Output out;
  out.report = json{{"config", config}, {"seed", c.seed}, {"budget", cfg.budget}, {"samples", a.samples}};
  if (outside == 0)
    out.report["tvDistance"] = to_json(tv_distance(counts, target.n_order));
  else
    out.report["tvDistance"] = nullptr;
  out.report["outside"] = outside;

  // Element-level uniformity needs at least 5 expected samples per element.
  if (target.enumerated_n && outside == 0 && BigInt(a.samples) >= 5 * target.n_order) {
    const MixingReport mix = mixing_diagnostic(samples, *target.enumerated_n);
    out.report["chiSquared"] = json{{"stat", mix.chi_squared}, {"dof", mix.dof}, {"pass95", mix.pass95}};
  } else {
    out.report["chiSquared"] = nullptr;
  }

  std::ostringstream csv;
  if (wg.degree() > 0) {
    const auto ch = cycle_histogram(samples);
    json hj = json::object();
    for (const auto& [cyc, cnt] : ch)
      hj[std::to_string(cyc)] = cnt;
    out.report["cycleHistogram"] = hj;
    csv << "cycles,observed";
    std::optional<CycleDistribution> dist;
    if (target.cycle_parity) {
      dist = cycle_distribution(static_cast<int>(wg.degree()), *target.cycle_parity);
      std::map<std::int64_t, Rational> expected(dist->support.begin(), dist->support.end());
      if (outside == 0) {
        const ChiSquaredReport cyc = chi_squared_test(ch, expected);
        out.report["cycleTest"] = to_json(cyc);
      }
      const PointActionReport pa = point_action_uniformity(samples, static_cast<int>(wg.degree()));
      out.report["pointAction"] = json{{"histogram", pa.histogram}, {"test", to_json(pa.test)}};
      csv << ",expected";
    }
    csv << "\n";
    for (int cyc = 1; cyc <= static_cast<int>(wg.degree()); ++cyc) {
      const auto it = ch.find(cyc);
      const std::uint64_t o = it == ch.end() ? 0 : it->second;
      if (o == 0 && (!dist || !dist->support.count(cyc)))
        continue;
      csv << cyc << ',' << o;
      if (dist) {
        const auto e = dist->support.count(cyc) ? dist->support.at(cyc) * a.samples : Rational(0);
        csv << ',' << to_string(e);
      }
      csv << '\n';
    }
  } else {
    csv << "element,count\n";
    for (const auto& [x, cnt] : hist)
      csv << csv_escape(to_string(x)) << ',' << cnt << '\n';
  }
  out.csv = csv.str();
  if (outside > 0)
    out.code = kExitFailed;
  return out;
}

// ------------------------------------------------------------------- stats

struct StatsArgs
{
  int n = 8;
  std::string parity = "even";
  std::string observed;
  std::string expected;
  double alpha = 0.05;
  std::string counts;
  std::uint64_t m = 0;
};

Parity parse_parity(const std::string& p)
{
  if (p == "all")
    return Parity::all;
  if (p == "even")
    return Parity::even_only;
  throw SpecError("--parity must be all or even");
}

Output run_stats(const std::string& which, const StatsArgs& a, RunManifest& m)
{
  Output out;
  std::ostringstream csv;
  if (which == "stirling") {
    m.parameters = json{{"n", a.n}};
    if (a.n < 0 || a.n > 200)
      throw SpecError("--n must lie in [0, 200]");
    json row = json::array();
    csv << "c,value\n";
    for (int c = 0; c <= a.n; ++c) {
      const BigInt s = stirling_first(a.n, c);
      row.push_back(json{{"c", c}, {"value", s.str()}});
      csv << c << ',' << s << '\n';
    }
    out.report = json{{"n", a.n}, {"stirlingFirst", row}};
  } else if (which == "cycles") {
    m.parameters = json{{"n", a.n}, {"parity", a.parity}};
    if (a.n < 1 || a.n > 200)
      throw SpecError("--n must lie in [1, 200]");
    const CycleDistribution d = cycle_distribution(a.n, parse_parity(a.parity));
    out.report = json{{"distribution", to_json(d)}};
    csv << to_csv(d);
  } else if (which == "chi2") {
    m.parameters = json{{"observed", a.observed}, {"expected", a.expected}, {"alpha", a.alpha}};
    std::map<std::int64_t, std::uint64_t> obs;
    std::map<std::int64_t, Rational> exp;
    for (const auto& item : split(a.observed, ',')) {
      const auto kv = split(trim(item), ':');
      if (kv.size() != 2)
        throw SpecError("--observed entries are key:count");
      obs[std::stoll(kv[0])] = std::stoull(kv[1]);
    }
    for (const auto& item : split(a.expected, ',')) {
      const auto kv = split(trim(item), ':');
      if (kv.size() != 2)
        throw SpecError("--expected entries are key:p or key:p/q");
      exp[std::stoll(kv[0])] = Rational(kv[1]);
    }
    Rational sum = 0;
    for (const auto& [k, p] : exp)
      sum += p;
    if (sum != 1)
      throw SpecError("--expected probabilities sum to " + to_string(sum) + ", not 1");
    const ChiSquaredReport r = chi_squared_test(obs, exp, a.alpha);
    out.report = json{{"chiSquared", to_json(r)}};
    csv << "statistic,dof,critical,pass\n" << r.statistic << ',' << r.dof << ',' << r.critical << ',' << r.pass << '\n';
  } else if (which == "tv") {
    m.parameters = json{{"counts", a.counts}, {"m", a.m}};
    std::vector<std::uint64_t> counts;
    for (const auto& item : split(a.counts, ','))
      counts.push_back(std::stoull(trim(item)));
    const Rational tv = tv_distance(counts, a.m);
    out.report = json{{"tvDistance", to_json(tv)}};
    csv << "numerator,denominator\n" << numerator(tv) << ',' << denominator(tv) << '\n';
  }
  out.csv = csv.str();
  return out;
}

// -------------------------------------------------------------------- scan

struct ScanArgs
{
  std::string mode = "full-ac";
  std::string pair = "ak";
  std::string base;
  std::string series;
  bool directed = false;
  bool no_geodesic = false;
};

WordPair parse_pair(const std::string& text)
{
  if (text == "ak")
    return ak_pair();
  if (text == "identity")
    return identity_pair();
  const auto parts = split(text, ';');
  if (parts.size() != 2)
    throw SpecError("--pair must be ak, identity or 'u;v'");
  return {Word::parse(parts[0]), Word::parse(parts[1])};
}

Output run_scan(const Common& c, const ScanArgs& a, RunManifest& m, const Limits& limits)
{
  const GraphKind kind = parse_graph_kind(a.mode);
  const WordPair pair = parse_pair(a.pair);
  m.parameters = json{{"mode", a.mode},       {"pair", pair.to_string()}, {"base", a.base},
                      {"series", a.series},   {"directed", a.directed},   {"geodesic", !a.no_geodesic}};
  Output out;
  std::ostringstream csv;
  if (!a.series.empty()) {
    std::vector<std::string> specs;
    for (const auto& s : split(a.series, '/'))
      specs.push_back(trim(s));
    const auto rows = distance_series(specs, pair, kind, !a.directed, limits);
    json table = json::array();
    csv << "spec,order,distance,sameComponent,baseComponentSize,imageComponentSize,error\n";
    for (const auto& row : rows) {
      json r{{"spec", row.spec}, {"order", row.order}};
      if (row.scan) {
        r["distance"] = row.scan->distance ? json(*row.scan->distance) : json("inf");
        r["sameComponent"] = row.scan->same_component;
        r["imageIsVertex"] = row.scan->image_is_vertex;
        r["componentSizes"] = json{{"base", row.scan->base_component_size},
                                   {"image", row.scan->image_component_size}};
        csv << csv_escape(row.spec) << ',' << row.order << ','
            << (row.scan->distance ? std::to_string(*row.scan->distance) : "inf") << ',' << row.scan->same_component
            << ',' << row.scan->base_component_size << ',' << row.scan->image_component_size << ",\n";
      } else {
        r["error"] = row.error;
        csv << csv_escape(row.spec) << ',' << row.order << ",,,,," << csv_escape(row.error) << '\n';
      }
      table.push_back(r);
    }
    out.report = json{{"pair", pair.to_string()}, {"mode", a.mode}, {"symmetricConjugators", !a.directed},
                      {"series", table}};
    out.csv = csv.str();
    return out;
  }

  const GroupPtr g = make_group(c.group, limits);
  const GraphHandle h = scan_graph(g, kind, 2, !a.directed, limits);
  const Tuple base = a.base.empty() ? base_tuple(*g, 2) : parse_tuple(*g, a.base, 2);
  const ScanReport r = scan_quotient(h, base, pair, !a.no_geodesic);
  out.report = json{{"groupSpec", g->name()}, {"pair", pair.to_string()}, {"graph", to_json(h)}};
  const json body = to_json(*g, r);
  for (const auto& [key, value] : body.items())
    out.report[key] = value;
  csv << "step,move,to\n";
  for (std::size_t i = 0; i < r.geodesic.size(); ++i)
    csv << i + 1 << ',' << csv_escape(r.geodesic[i].move.to_string(*g)) << ','
        << csv_escape(tuple_text(*g, h.decode(r.geodesic[i].to))) << '\n';
  out.csv = csv.str();
  return out;
}

// ------------------------------------------------------------------ verify

Output run_verify(const std::string& corpus_text, RunManifest& m, const Limits& limits)
{
  std::vector<std::string> corpus = default_corpus();
  if (!corpus_text.empty()) {
    corpus.clear();
    for (const auto& s : split(corpus_text, '/'))
      corpus.push_back(trim(s));
  }
  m.parameters = json{{"corpus", corpus}};
  const auto results = verify_corpus(corpus, limits);
  Output out;
  json checks = json::array();
  std::ostringstream csv;
  csv << "module,check,passed,informational,detail\n";
  for (const auto& r : results) {
    checks.push_back(json{{"module", r.module},
                          {"check", r.name},
                          {"passed", r.passed},
                          {"informational", r.informational},
                          {"detail", r.detail}});
    csv << r.module << ',' << csv_escape(r.name) << ',' << r.passed << ',' << r.informational << ','
        << csv_escape(r.detail) << '\n';
    std::cerr << (r.passed ? "PASS " : (r.informational ? "INFO " : "FAIL ")) << r.module << ": " << r.name << "\n";
  }
  const bool ok = all_passed(results);
  out.report = json{{"passed", ok}, {"checks", checks}};
  out.csv = csv.str();
  out.code = ok ? kExitOk : kExitFailed;
  return out;
}

void add_common(CLI::App* app, Common& c, bool with_group)
{
  if (with_group)
    app->add_option("--group", c.group, "group spec: sym:n alt:n sl2:p abelian:e1,e2 dihedral:n cyclic:n")
      ->capture_default_str();
  app->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
  app->add_option("--threads", c.threads, "worker threads (0 = runtime default)");
  app->add_option("--format", c.format, "json or csv")
    ->check(CLI::IsMember({"json", "csv"}))
    ->capture_default_str();
  app->add_option("--out", c.out, "report path (default stdout)");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Andrews-Curtis and product replacement graph toolkit"};
  app.set_version_flag("--version", std::string(acg::kVersion));
  app.require_subcommand(1);

  Common common;
  AnalyzeArgs analyze_args;
  WalkArgs walk_args;
  StatsArgs stats_args;
  ScanArgs scan_args;
  std::string corpus;

  auto* analyze = app.add_subcommand("analyze", "vertices, components, diameters and distances of a graph");
  add_common(analyze, common, true);
  analyze->add_option("--k", analyze_args.k, "tuple length")->capture_default_str();
  analyze->add_option("--mode", analyze_args.mode, "full-ac, restricted-ac, nielsen or extended-nielsen")
    ->capture_default_str();
  analyze->add_option("--normal", analyze_args.normal, "whole, derived, trivial or ncl:<elements>")
    ->capture_default_str();
  analyze->add_flag("--directed", analyze_args.directed, "restricted mode: no conjugation by s^-1");
  analyze->add_option("--diameter", analyze_args.diameter, "off, exact or estimate")->capture_default_str();
  analyze->add_option("--from", analyze_args.from, "distance source tuple, components separated by ';'");
  analyze->add_option("--to", analyze_args.to, "distance target tuple");
  analyze->add_flag("--membership", analyze_args.membership, "CSV: list every vertex with its component");

  auto* walk = app.add_subcommand("walk", "run a random walk sampler and test its output");
  add_common(walk, common, true);
  walk->add_option("--kind", walk_args.kind, "acr or pra")->capture_default_str();
  walk->add_option("--k", walk_args.k, "tuple length")->capture_default_str();
  walk->add_option("--normal", walk_args.normal, "whole, derived, trivial or ncl:<elements>")->capture_default_str();
  walk->add_option("--init", walk_args.init, "initial tuple, padded with identities");
  walk->add_option("--budget", walk_args.budget, "steps per sample, or auto")->capture_default_str();
  walk->add_option("--samples", walk_args.samples, "independent walks")->capture_default_str();
  walk->add_flag("--cumulative", walk_args.cumulative, "return the running product");
  walk->add_option("--conjugators", walk_args.conjugators, "uniform or word:L")->capture_default_str();
  walk->add_option("--conj-prob", walk_args.conjugated_probability, "probability of the conjugated branch")
    ->capture_default_str();
  walk->add_flag("--full-moves", walk_args.full_moves, "also take inversion and conjugation steps");

  auto* stats = app.add_subcommand("stats", "reference distributions and tests");
  stats->require_subcommand(1);
  auto* stirling = stats->add_subcommand("stirling", "unsigned Stirling numbers of the first kind s(n, c)");
  auto* cycles = stats->add_subcommand("cycles", "cycle-count distribution of Sym_n or Alt_n");
  auto* chi2 = stats->add_subcommand("chi2", "chi-squared goodness of fit");
  auto* tv = stats->add_subcommand("tv", "total variation distance to uniform");
  for (auto* sub : {stirling, cycles, chi2, tv})
    add_common(sub, common, false);
  stirling->add_option("--n", stats_args.n)->required();
  cycles->add_option("--n", stats_args.n)->required();
  cycles->add_option("--parity", stats_args.parity, "all or even")->capture_default_str();
  chi2->add_option("--observed", stats_args.observed, "key:count,...")->required();
  chi2->add_option("--expected", stats_args.expected, "key:p/q,...")->required();
  chi2->add_option("--alpha", stats_args.alpha)->capture_default_str();
  tv->add_option("--counts", stats_args.counts, "count,count,...")->required();
  tv->add_option("--m", stats_args.m, "size of the set")->required();

  auto* scan = app.add_subcommand("scan", "push a base pair through a word-pair map and measure the distance");
  add_common(scan, common, true);
  scan->add_option("--mode", scan_args.mode, "graph mode")->capture_default_str();
  scan->add_option("--pair", scan_args.pair, "ak, identity or 'u;v'")->capture_default_str();
  scan->add_option("--base", scan_args.base, "base pair (default: the group's generators)");
  scan->add_option("--series", scan_args.series, "group specs separated by '/' (distance series)");
  scan->add_flag("--directed", scan_args.directed, "restricted mode: no conjugation by s^-1");
  scan->add_flag("--no-geodesic", scan_args.no_geodesic, "skip the path export");

  auto* verify = app.add_subcommand("verify", "check every module invariant over the corpus");
  add_common(verify, common, false);
  verify->add_option("--corpus", corpus, "group specs separated by '/'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  RunManifest manifest;
  manifest.seed = common.seed;
  manifest.output_path = common.out;
  try {
    set_thread_count(common.threads);
    const Limits limits = Limits::from_env();
    Output out;
    if (analyze->parsed()) {
      manifest.command = "analyze";
      manifest.group_spec = common.group;
      out = run_analyze(common, analyze_args, manifest, limits);
    } else if (walk->parsed()) {
      manifest.command = "walk";
      manifest.group_spec = common.group;
      out = run_walk(common, walk_args, manifest, limits);
    } else if (stats->parsed()) {
      manifest.command = "stats";
      std::string which;
      for (auto* sub : {stirling, cycles, chi2, tv})
        if (sub->parsed())
          which = sub->get_name();
      out = run_stats(which, stats_args, manifest);
      manifest.parameters["test"] = which;
    } else if (scan->parsed()) {
      manifest.command = "scan";
      manifest.group_spec = scan_args.series.empty() ? common.group : "";
      out = run_scan(common, scan_args, manifest, limits);
    } else {
      manifest.command = "verify";
      out = run_verify(corpus, manifest, limits);
    }

    const std::string text = common.format == "csv" ? out.csv : wrap_report(manifest, out.report).dump(2) + "\n";
    if (common.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(common.out, std::ios::binary);
      if (!file)
        throw SpecError("cannot open '" + common.out + "' for writing");
      file << text;
    }
    return out.code;
  } catch (const ResourceError& e) {
    std::cerr << "acg: " << e.what() << "\n";
    return kExitResource;
  } catch (const SpecError& e) {
    std::cerr << "acg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "acg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TypeError& e) {
    std::cerr << "acg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "acg: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "acg: invalid number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "acg: number out of range: " << e.what() << "\n";
    return kExitUsage;
  }
}
