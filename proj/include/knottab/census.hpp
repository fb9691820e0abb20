#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knottab/classify.hpp"
#include "knottab/repr.hpp"

namespace knottab {

struct EnumFilters {
  bool even_only = false;
  bool positive_only = false;
  bool allow_over_budget = false;
};

// One canonical representative per key, ordered by representation.
// Degenerate classes (trivial knots and split unlinks) are dropped.
std::vector<Rep> enumerate(int girth, int max_abs_label, const EnumFilters& f = {});

struct CensusRow {
  Rep rep;
  RepInvariants inv;
  int class_id = 0;
  std::string verdict;  // "unique", or the comparison with the class's first member
};

struct CensusResult {
  std::vector<CensusRow> rows;
  int num_classes = 0;
  std::vector<std::vector<int>> collisions;  // row indices of classes with >= 2 members
};

CensusResult dedup_census(const std::vector<Rep>& reps, Method m = Method::closed, int budget_crossings = 24,
                          int jobs = 1, bool mirror_ok = false);

void write_csv(std::ostream& os, const CensusResult& c);
void write_jsonl(std::ostream& os, const CensusResult& c);

struct TableFixture {
  std::string name;
  std::optional<std::string> rep;  // absent when the table has no representation
  int crossings = 0;
  int components = 1;
};

std::vector<TableFixture> load_table(const std::string& table_json);

struct TableEntryResult {
  std::string name;
  std::string rep;
  std::string status;  // PASS, FAIL, SKIP, ABSENT
  std::string detail;
};

struct TableReport {
  std::vector<TableEntryResult> entries;
  int passed = 0, failed = 0, skipped = 0, absent = 0;
};

// Compares each representation with the reference diagram in
// fixture_dir/<name>.pd.json: knots by Jones up to mirror, links by bracket
// up to a unit and mirror. Entries above max_crossings are skipped.
TableReport verify_table(const std::vector<TableFixture>& table, const std::string& fixture_dir,
                         int max_crossings = 99);

nlohmann::json to_json(const TableReport& r);

}  // namespace knottab
