#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmc {

enum class CheckStatus { kPass, kFail, kInconclusive };

inline const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    default: return "inconclusive";
  }
}

struct CheckLine {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string detail;  // for failures: names the first offending term
};

// Machine-readable run report. Deterministic for identical inputs and bounds:
// timing is reported only when requested and never feeds the payload.
struct RunReport {
  int schema_version = 1;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // echoed
  std::vector<std::pair<std::string, std::string>> bounds;
  std::vector<CheckLine> checks;
  std::vector<std::pair<std::string, std::string>> payload;
  std::vector<std::pair<std::string, std::uint64_t>> fixture_hashes;
  long timing_ms = -1;  // -1 = not measured

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return false;
    return true;
  }
  bool any_inconclusive() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kInconclusive) return true;
    return false;
  }
  // 0 pass, 1 check failure, 2 inconclusive.
  int exit_code() const {
    if (!all_passed()) return 1;
    return any_inconclusive() ? 2 : 0;
  }

  std::string to_text() const;
  std::string to_json() const;
};

// FNV-1a over the bytes; used to pin fixture content in reports.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace gmc
