#pragma once

#include <string>
#include <vector>

namespace extspec {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

struct Report {
  std::string name;
  std::vector<Check> checks;

  void add(std::string check_name, bool pass, double value, double bound) {
    checks.push_back({std::move(check_name), pass, value, bound});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace extspec
