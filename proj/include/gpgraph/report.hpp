#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace gpgraph {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  double seconds = 0;

  void check(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  std::size_t passed() const {
    std::size_t c = 0;
    for (const auto& r : checks) c += r.pass;
    return c;
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
};

}  // namespace gpgraph
