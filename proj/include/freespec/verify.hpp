#pragma once

#include <string>
#include <vector>

#include "freespec/rank.hpp"

namespace freespec {

struct Check {
  std::string module;
  std::string name;
  bool passed = false;
  bool skipped = false;  // not applicable at this theta
  double value = 0.0;    // worst observed error (0 for exact checks that hold)
  double tolerance = 0.0;
  std::string detail;
};

/// Cross-checks every module at one theta. Each entry compares two independent
/// routes to the same quantity, or an exact identity.
std::vector<Check> run_checks(const RankParam& rank);

/// True iff no non-skipped check failed.
bool all_passed(const std::vector<Check>& checks);

}  // namespace freespec
