#pragma once

#include <string>
#include <vector>

namespace society {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-checks every exact sequence against its independent oracles
/// (series, explicit formula, enumeration), the rank statistics, and the
/// asymptotic convergence diagnostics. Reads the shared sequence tables, so
/// a corrupted table shows up as failures. Exceptions inside a check are
/// reported as a failure of that check.
std::vector<CheckResult> run_verification(VerifyLevel level);

/// H_6 summands of the explicit formula written out term by term:
/// 1, 45, 405, 405, 260, 2340, 1690, 1125, 3375, 3246, 4683.
const std::vector<unsigned long>& expanded_h6_summands();

}  // namespace society
