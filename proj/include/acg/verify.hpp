#pragma once

#include <string>
#include <vector>

#include "acg/exec.hpp"
#include "acg/limits.hpp"

namespace acg {

struct CheckResult
{
  std::string module;
  std::string name;
  bool passed = false;
  /// Reported-only properties never fail the run.
  bool informational = false;
  std::string detail;
};

/// Groups the invariant suite runs over.
std::vector<std::string> default_corpus();

/// Checks every module invariant exhaustively (or on seeded samples where
/// noted in the detail) over the corpus.
std::vector<CheckResult> verify_corpus(const std::vector<std::string>& corpus, const Limits& limits = {},
                                       Exec exec = Exec::parallel);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace acg
