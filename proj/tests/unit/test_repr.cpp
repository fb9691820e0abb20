#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "knottab/closedform.hpp"
#include "knottab/oracle.hpp"
#include "knottab/repr.hpp"

using namespace knottab;

namespace {
bool contains(const std::vector<Girth3Rep>& v, const Girth3Rep& r) { return std::find(v.begin(), v.end(), r) != v.end(); }
}  // namespace

TEST_CASE("parse representations") {
  CHECK(parse_rep("(3)") == Rep{Girth1Rep{3}});
  CHECK(parse_rep("(2,-2)") == Rep{Girth2Rep{2, -2}});
  CHECK(parse_rep("[0 2 2 / 0 -1 -1]") == Rep{Girth3Rep{{0, 2, 2}, {0, -1, -1}}});
  CHECK_THROWS_AS(parse_rep("(2,"), parse_error);
  CHECK_THROWS_AS(parse_rep("[1 2/3 4]"), parse_error);
  for (const char* s : {"(3)", "(2,-2)", "[0 2 2 / 0 -1 -1]", "[4 8 12 / 4 6 2]"}) {
    const Rep r = parse_rep(s);
    CHECK(parse_rep(to_string(r)) == r);
    CHECK(rep_from_json(to_json(r)) == r);
  }
}

TEST_CASE("dihedral orbit") {
  const Girth3Rep r{{2, 4, 6}, {8, 10, 12}};
  const auto orbit = d3_orbit(r);
  CHECK(orbit.size() == 12);
  CHECK(contains(orbit, Girth3Rep{{4, 6, 2}, {10, 12, 8}}));
  CHECK(contains(orbit, d3_row_swap(r)));
  CHECK(contains(orbit, d3_reflect(r)));
  CHECK(d3_orbit(Girth3Rep{{2, 2, 2}, {2, 2, 2}}).size() == 1);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
}

TEST_CASE("literal row exchange is not a bracket symmetry") {
  // (a b c / p q r) keeps column order; the generator that preserves the
  // bracket pairs the rows as (a b c / q r p).
  const Girth3Rep r{{2, 4, 6}, {2, 4, 8}};
  const Girth3Rep literal{{2, 4, 8}, {2, 4, 6}};
  CHECK(bracket_girth3(r) != bracket_girth3(literal));
  CHECK(bracket_girth3(r) == bracket_girth3(d3_row_swap(r)));
}

TEST_CASE("canonical keys") {
  CHECK(canonicalize(Girth2Rep{3, -2}).key == canonicalize(Girth2Rep{-2, 3}).key);
  CHECK(canonicalize(Girth2Rep{2, -1}).rep == Rep{Girth1Rep{3}});
  const Girth3Rep r{{2, 4, 6}, {1, 3, 5}};
  CHECK(canonicalize(d3_rotate(r)).key == canonicalize(r).key);
  CHECK(canonicalize(Girth1Rep{1}).degenerate);
}

TEST_CASE("mirror") {
  CHECK(mirror(Girth2Rep{2, 2}) == Rep{Girth2Rep{-2, -2}});
  for (const Rep& r : {Rep{Girth1Rep{3}}, Rep{Girth2Rep{2, -3}}, Rep{Girth3Rep{{0, 2, 2}, {0, -1, -1}}}})
    CHECK(mirror(mirror(r)) == r);
  CHECK(bracket_oracle(pd_from_rep(mirror(Girth1Rep{3}))) == bracket_oracle(pd_from_rep(Girth1Rep{3})).invert_variable());
}
