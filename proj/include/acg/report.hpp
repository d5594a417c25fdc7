#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "acg/graph.hpp"
#include "acg/stats.hpp"
#include "acg/walkers.hpp"
#include "acg/words.hpp"

namespace acg {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// What a CLI run was asked to do; embedded verbatim in its report.
struct RunManifest
{
  std::string command;
  std::string group_spec;
  /// Command parameters with every default resolved.
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::string output_path;
};

json to_json(const RunManifest& m);
/// Exact rationals serialize as "p/q" strings.
json to_json(const Rational& r);
/// Permutations as image arrays, matrices as {entries, modulus}, abelian
/// tuples as {residues, moduli}.
json to_json(const GroupElement& e);
json to_json(const FiniteGroup& g, const Tuple& t);
json to_json(const Subgroup& s);
/// {invariantFactors, generatorImages}: images of the generators of g.
json to_json(const FiniteGroup& g, const AbelianStructure& a);
json to_json(const ChiSquaredReport& r);
json to_json(const CycleDistribution& d);
json to_json(const MixingReport& r);
json to_json(const GraphHandle& h);
json to_json(const FiniteGroup& g, const ScanReport& r);

/// {"manifest": ..., "version": ..., <body fields>}.
json wrap_report(const RunManifest& m, const json& body);

} // namespace acg
