#pragma once

// Named regression checks over the explicit families: orbit structure,
// opposites, brace criteria, lattices, and the transport laws of each
// construction.

#include <functional>
#include <string>
#include <vector>

namespace hgslab {

enum class CheckStatus {
  kPass,
  kFail,
  // The claim as usually stated is false; `detail` gives the verified
  // replacement, which passed.
  kDiscrepancy,
};

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  std::string tag;
  std::string claim;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;
};

struct ReferenceCheck {
  std::string id;
  std::string tag;  // family the check belongs to
  std::string claim;
  std::function<CheckResult()> run;
};

const std::vector<ReferenceCheck>& reference_checks();

// Runs the checks whose id or tag equals `only` (all when empty). Throws
// Error(kUsage) if nothing matches.
std::vector<CheckResult> run_reference_checks(const std::string& only = "");

}  // namespace hgslab
