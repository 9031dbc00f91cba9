#include "report.hpp"

#include <json.hpp>

namespace affweyl {

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

std::string Report::text() const {
  std::string out;
  for (const Check& c : checks) {
    out += c.pass ? "PASS" : "FAIL";
    out += "  " + c.name;
    if (!c.pass)
      out += "  expected=" + c.expected + " actual=" + c.actual;
    else if (c.expected.empty() && !c.actual.empty())
      out += "  = " + c.actual;  // informational entry
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace affweyl
