#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "knottab/classify.hpp"

using namespace knottab;
using namespace knottab::test;

TEST_CASE("girth-2 even classification") {
  const Verdict v = classify_girth2_even(2, 8, 4, 4);
  CHECK(v.tag == VerdictTag::DistinctByJones);
  CHECK(rep_invariants(Girth2Rep{2, 8}).span == 10);
  CHECK(rep_invariants(Girth2Rep{4, 4}).span == 8);
  CHECK(classify_girth2_even(2, 4, 4, 2).tag == VerdictTag::EqualBySymmetry);
  const Verdict c = classify_girth2_even(2, 6, 2, 8);
  CHECK(c.tag == VerdictTag::DistinctByConway);
  CHECK(rep_invariants(Girth2Rep{2, 6}).conway == z_poly("3z^2 + 1"));
  CHECK(rep_invariants(Girth2Rep{2, 8}).conway == z_poly("4z^2 + 1"));
  CHECK_THROWS_AS(classify_girth2_even(2, 3, 4, 4), usage_error);
}

TEST_CASE("transpositions") {
  CHECK(transposition_test(Girth3Rep{{2, 4, 4}, {2, 4, 6}}, Perm3::swap_ac).tag == VerdictTag::EqualBySymmetry);
  const Verdict v = transposition_test(Girth3Rep{{2, 4, 6}, {2, 4, 6}}, Perm3::swap_ab);
  CHECK(v.tag == VerdictTag::DistinctByConway);
  REQUIRE(v.evidence);
  CHECK(*v.evidence == Z(2, 2));
  CHECK(transposition_test(Girth3Rep{{2, 4, 6}, {4, 4, 4}}, Perm3::swap_ac).tag == VerdictTag::EqualBySymmetry);
}

TEST_CASE("3-cycle obstruction") {
  CHECK(cycle_obstruction(Girth3Rep{{4, 8, 12}, {4, 6, 2}}, Perm3::cycle_cab).tag == VerdictTag::DistinctByJones);
  CHECK(cycle_obstruction(Girth3Rep{{2, 2, 2}, {2, 2, 2}}, Perm3::cycle_cab).tag == VerdictTag::Unresolved);
  CHECK(cycle_obstruction(Girth3Rep{{2, 4, 8}, {2, 6, 10}}, Perm3::cycle_bca).tag == VerdictTag::DistinctByConway);
}

TEST_CASE("row exchange") {
  CHECK(row_swap_test(Girth3Rep{{2, 0, 4}, {4, 6, 0}}).tag != VerdictTag::NecessaryConditionFails);
  CHECK(row_swap_test(Girth3Rep{{2, 4, 6}, {4, 6, 4}}).tag != VerdictTag::NecessaryConditionFails);
  CHECK(row_swap_test(Girth3Rep{{2, 4, 6}, {4, 6, 8}}).tag == VerdictTag::NecessaryConditionFails);
}

TEST_CASE("compare") {
  CHECK(compare(Girth2Rep{2, 8}, Girth2Rep{4, 4}).tag == VerdictTag::DistinctByJones);
  const Girth3Rep r{{2, 4, 6}, {1, 3, 5}};
  for (const auto& s : d3_orbit(r)) CHECK(compare(r, s).tag == VerdictTag::EqualBySymmetry);
  CHECK(compare(parse_rep("[4 8 12/4 6 2]"), parse_rep("[4 8 12/2 4 6]")).tag == VerdictTag::DistinctByJones);
  CHECK(compare(Girth2Rep{2, 2}, Girth2Rep{-2, -2}).tag != VerdictTag::EqualBySymmetry);
  CHECK(compare(Girth2Rep{2, 2}, Girth2Rep{-2, -2}, true).tag == VerdictTag::EqualBySymmetry);
}

TEST_CASE("verdict json") {
  const auto j = to_json(compare(Girth2Rep{2, 6}, Girth2Rep{2, 8}));
  CHECK(j.at("verdict") == "DistinctByConway");
}
