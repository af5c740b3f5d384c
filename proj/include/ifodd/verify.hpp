#pragma once

// One-shot verification sweep behind `ifodd verify`.

#include <json.hpp>
#include <string>
#include <vector>

#include "ifodd/qbg.hpp"

namespace ifodd {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationSummary {
  int n_max = 2;
  QuantumRule rule = QuantumRule::SubComponent;
  std::vector<CheckResult> checks;
  /// Informational: length of the top element vs the stated 4n-6 (not a check).
  std::vector<std::pair<int, int>> top_lengths;

  bool ok() const;
  nlohmann::json to_json() const;
};

/// For n = 2..n_max: neighborhood cross-check up to (2,2), lattice and
/// shape checks, and the Property O verdict; plus the n = 2 golden diffs.
VerificationSummary run_verification(int n_max, QuantumRule rule = QuantumRule::SubComponent);

}  // namespace ifodd
