#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "common.hpp"
#include "knottab/census.hpp"

using namespace knottab;
using namespace knottab::test;

namespace {
bool has(const std::vector<Rep>& v, const Rep& r) { return std::find(v.begin(), v.end(), r) != v.end(); }
}  // namespace

TEST_CASE("enumerate girth 2") {
  const auto reps = enumerate(2, 4, {true, true, false});
  CHECK(reps == std::vector<Rep>{Girth2Rep{2, 2}, Girth2Rep{2, 4}, Girth2Rep{4, 4}});
  const auto all = enumerate(2, 2);
  CHECK(has(all, canonicalize(Girth2Rep{2, -2}).rep));
  CHECK_THROWS_AS(enumerate(2, 13), usage_error);
  CHECK_THROWS_AS(enumerate(4, 2), usage_error);
}

TEST_CASE("enumerate girth 3 even positive") {
  const auto reps = enumerate(3, 2, {true, true, false});
  CHECK(reps == std::vector<Rep>{Girth3Rep{{2, 2, 2}, {2, 2, 2}}});
}

TEST_CASE("girth-2 even census") {
  const auto c = dedup_census(enumerate(2, 10, {true, true, false}));
  CHECK(c.num_classes == 15);
  CHECK(c.collisions.empty());
}

TEST_CASE("K(2,8) and K(4,4) land in different classes") {
  const auto c = dedup_census({Girth2Rep{2, 8}, Girth2Rep{4, 4}});
  CHECK(c.rows[0].class_id != c.rows[1].class_id);
  CHECK(c.rows[0].inv.conway == c.rows[1].inv.conway);
}

TEST_CASE("an orbit collapses to one class") {
  const Girth3Rep r{{2, 4, 6}, {1, 3, 5}};
  const auto orbit = d3_orbit(r);
  const auto c = dedup_census({orbit.begin(), orbit.end()});
  CHECK(c.num_classes == 1);
  for (std::size_t i = 1; i < c.rows.size(); ++i) CHECK(c.rows[i].verdict == "EqualBySymmetry");
}

TEST_CASE("deterministic output regardless of jobs") {
  const auto reps = enumerate(3, 1);
  std::ostringstream a, b;
  write_csv(a, dedup_census(reps, Method::closed, 24, 1));
  write_csv(b, dedup_census(reps, Method::closed, 24, 3));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("rep,girth,components,conway,jones,span,class_id,verdict\n", 0) == 0);
}

TEST_CASE("table fixtures") {
  const auto table = load_table(fixture("table.json"));
  const auto it = std::find_if(table.begin(), table.end(), [](const auto& f) { return f.name == "8_18"; });
  REQUIRE(it != table.end());
  CHECK(!it->rep);
  const auto r = verify_table(table, fixture("rolfsen"), 7);
  CHECK(r.passed + r.failed + r.skipped + r.absent == static_cast<int>(table.size()));
  auto status = [&](const std::string& name) {
    for (const auto& e : r.entries)
      if (e.name == name) return e.status;
    return std::string("missing");
  };
  CHECK(status("3_1") == "PASS");
  CHECK(status("8_18") == "ABSENT");
  // Published representation draws 5_1; see the table errata in the README.
  CHECK(status("6_2") == "FAIL");
}
