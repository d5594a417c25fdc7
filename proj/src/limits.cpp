#include "acg/limits.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

#include "acg/errors.hpp"
#include "acg/exec.hpp"

namespace acg {

namespace {

void override_from(const char* var, std::uint64_t& field)
{
  const char* v = std::getenv(var);
  if (!v || !*v)
    return;
  try {
    std::size_t used = 0;
    const auto parsed = std::stoull(v, &used);
    if (used != std::string(v).size())
      throw SpecError("");
    field = parsed;
  } catch (const std::exception&) {
    throw SpecError(std::string("environment variable ") + var + " is not an unsigned integer");
  }
}

} // namespace

Limits Limits::from_env()
{
  Limits l;
  override_from("ACG_MAX_GROUP_ORDER", l.max_group_order);
  override_from("ACG_TABLE_THRESHOLD", l.table_threshold);
  override_from("ACG_MAX_VERTEX_CODES", l.max_vertex_codes);
  override_from("ACG_MAX_TUPLE_CENSUS", l.max_tuple_census);
  override_from("ACG_MAX_ND_ORDER", l.max_nd_order);
  override_from("ACG_MAX_LIFT_SEARCH", l.max_lift_search);
  return l;
}

void set_thread_count(int n)
{
  if (n > 0)
    omp_set_num_threads(n);
}

int thread_count()
{
  return omp_get_max_threads();
}

} // namespace acg
