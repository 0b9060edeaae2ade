#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace paraf {

// Outcome of a verification routine: overall status, human-readable
// findings (violations or notes) and a machine-readable payload.
struct Report {
  bool pass = true;
  std::vector<std::string> findings;
  nlohmann::json payload = nlohmann::json::object();

  void fail(std::string what) {
    pass = false;
    findings.push_back(std::move(what));
  }
  void note(std::string what) { findings.push_back(std::move(what)); }
  void merge(const Report& other) {
    pass = pass && other.pass;
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
};

nlohmann::json to_json(const Report& r);

}  // namespace paraf
