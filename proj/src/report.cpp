#include "graphmc/report.hpp"

#include <sstream>

#include "json.hpp"

namespace gmc {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  for (const auto& [k, v] : inputs) os << "input " << k << " = " << v << "\n";
  for (const auto& [k, v] : bounds) os << "bound " << k << " = " << v << "\n";
  for (const auto& [k, v] : fixture_hashes) {
    std::ostringstream hex;
    hex << std::hex << v;
    os << "fixture " << k << " sha=fnv1a:" << hex.str() << "\n";
  }
  for (const auto& [k, v] : payload) os << k << ": " << v << "\n";
  int idx = 0;
  for (const auto& c : checks) {
    ++idx;
    os << "[" << idx << "/" << checks.size() << "] ";
    os << (c.status == CheckStatus::kPass
               ? "PASS"
               : (c.status == CheckStatus::kFail ? "FAIL" : "INCONCLUSIVE"));
    os << " " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  if (timing_ms >= 0) os << "timing_ms: " << timing_ms << "\n";
  return os.str();
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  nlohmann::ordered_json bd = nlohmann::ordered_json::object();
  for (const auto& [k, v] : bounds) bd[k] = v;
  j["bounds"] = bd;
  nlohmann::ordered_json fx = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fixture_hashes) {
    std::ostringstream hex;
    hex << std::hex << v;
    fx[k] = "fnv1a:" + hex.str();
  }
  j["fixtures"] = fx;
  nlohmann::ordered_json pl = nlohmann::ordered_json::object();
  for (const auto& [k, v] : payload) pl[k] = v;
  j["payload"] = pl;
  auto cl = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    cl.push_back(e);
  }
  j["checks"] = cl;
  if (timing_ms >= 0) j["timing_ms"] = timing_ms;
  return j.dump(2);
}

}  // namespace gmc
