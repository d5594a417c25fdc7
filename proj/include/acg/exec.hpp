#pragma once

namespace acg {

/// Execution policy for the data-parallel kernels. `serial` is the reference
/// implementation; `parallel` uses OpenMP and must produce identical results.
enum class Exec
{
  serial,
  parallel
};

/// Sets the OpenMP worker count; n <= 0 keeps the runtime default.
void set_thread_count(int n);
int thread_count();

} // namespace acg
