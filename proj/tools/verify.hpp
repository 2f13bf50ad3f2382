#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ratknot::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Suites: table1, fibonacci, lens, all. Throws std::invalid_argument for an
// unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, int max_n, unsigned threads);

}  // namespace ratknot::cli
