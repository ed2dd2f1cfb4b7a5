#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pq::cli {

enum class CheckStatus { Pass, Flagged, Fail };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string anchor;  ///< quoted phrase locating the claim
  CheckStatus status = CheckStatus::Fail;
  std::string details;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  /// 2 on any failure, 3 on flags when strict, 0 otherwise.
  int exit_code(bool strict) const;
};

/// Runs every anchored check. The seed drives the random polynomial sweeps.
VerificationReport run_verification(std::uint64_t seed = 20240601);

nlohmann::json to_json(const VerificationReport& r);
/// One line per check: "<status> <id>  [<anchor>]  <details>".
std::string to_text(const VerificationReport& r);

}  // namespace pq::cli
