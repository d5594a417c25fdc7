#pragma once

#include <cstdint>

namespace acg {

/// Brute-force caps. Every enumeration checks the relevant field and throws
/// ResourceError naming it.
struct Limits
{
  /// Largest group that parse_group will enumerate.
  std::uint64_t max_group_order = 4'000'000;
  /// Dense multiplication tables are built up to this order.
  std::uint64_t table_threshold = 2048;
  /// Size of the mixed-radix code space |N|^k of a graph.
  std::uint64_t max_vertex_codes = std::uint64_t{1} << 25;
  /// Tuple census for psi_k and similar exhaustive counts.
  std::uint64_t max_tuple_census = std::uint64_t{1} << 26;
  /// nd / nd_m subset search.
  std::uint64_t max_nd_order = 200;
  /// Exhaustive search space of mazurov_lift, |M|^k.
  std::uint64_t max_lift_search = std::uint64_t{1} << 22;

  /// Defaults overridden by ACG_MAX_GROUP_ORDER, ACG_TABLE_THRESHOLD,
  /// ACG_MAX_VERTEX_CODES, ACG_MAX_TUPLE_CENSUS, ACG_MAX_ND_ORDER and
  /// ACG_MAX_LIFT_SEARCH when set.
  static Limits from_env();
};

} // namespace acg
