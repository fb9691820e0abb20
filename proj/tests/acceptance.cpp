#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "knottab/checks.hpp"

#ifndef KNOTTAB_DATA_DIR
#define KNOTTAB_DATA_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  knottab::CheckOptions opts;
  std::string data = KNOTTAB_DATA_DIR;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (a == "--data-dir" && i + 1 < argc)
      data = argv[++i];
    else {
      std::fprintf(stderr, "usage: acceptance [--only N] [--data-dir DIR]\n");
      return 2;
    }
  }
  opts.table_json = data + "/table.json";
  opts.fixture_dir = data + "/rolfsen";
  int failed = 0;
  for (const auto& c : knottab::all_checks()) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    knottab::CheckResult r;
    try {
      r = c.run(opts);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), r.detail.c_str(), s);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
