#pragma once

#include <functional>
#include <string>
#include <vector>

namespace knottab {

struct CheckResult {
  bool pass = false;
  std::string detail;  // counts on success, the first failing case otherwise
};

struct CheckOptions {
  std::string table_json;   // empty skips the table half of the girth check
  std::string fixture_dir;
  unsigned seed = 20240611;
};

struct Check {
  int id;
  std::string title;
  std::function<CheckResult(const CheckOptions&)> run;
};

// The property suites, numbered as in the acceptance list.
const std::vector<Check>& all_checks();

}  // namespace knottab
