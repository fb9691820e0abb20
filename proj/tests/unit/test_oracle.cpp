#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "common.hpp"
#include "knottab/closedform.hpp"
#include "knottab/oracle.hpp"

using namespace knottab;
using namespace knottab::test;

namespace {

// Disjoint union of two diagrams, arcs of b renumbered after a's.
PDCode disjoint_union(const PDCode& a, const PDCode& b) {
  int top = 0;
  for (const auto& x : a.crossings)
    for (int v : x) top = std::max(top, v);
  PDCode out = a;
  for (auto x : b.crossings) {
    for (int& v : x) v += top;
    out.crossings.push_back(x);
  }
  out.free_loops += b.free_loops;
  return out;
}

// Pretzel PD built from rational tangles by spherogram.
PDCode pretzel(const std::string& name) { return load_pd(fixture("pretzel/" + name + ".pd.json")); }

}  // namespace

TEST_CASE("state sum and contraction agree") {
  for (const Rep& r : {Rep{Girth2Rep{4, -3}}, Rep{Girth3Rep{{2, -1, 3}, {1, 2, -2}}}, Rep{Girth3Rep{{3, 3, 2}, {2, 3, 3}}}})
    CHECK(bracket_state_sum(pd_from_rep(r)) == bracket_contraction(pd_from_rep(r)));
  for (const char* name : {"7_4", "8_18", "8^2_1"}) {
    const auto path = fixture(std::string("rolfsen/") + name + ".pd.json");
    if (!std::filesystem::exists(path)) continue;
    const PDCode pd = load_pd(path);
    CHECK(bracket_state_sum(pd, 2) == bracket_contraction(pd));
  }
}

TEST_CASE("state sum refuses large diagrams") {
  CHECK_THROWS_AS(bracket_state_sum(pd_from_rep(Girth3Rep{{5, 5, 5}, {5, 5, 5}})), usage_error);
}

TEST_CASE("disjoint union multiplies by delta") {
  const PDCode a = pd_from_rep(Girth1Rep{3}), b = pd_from_rep(Girth2Rep{2, -2});
  CHECK(bracket_state_sum(disjoint_union(a, b)) == delta_poly() * bracket_state_sum(a) * bracket_state_sum(b));
}

TEST_CASE("writhe and components") {
  CHECK(std::abs(writhe(pd_from_rep(Girth3Rep{{2, 2, 2}, {2, 2, 2}}))) == 12);
  const PDCode t = pd_from_rep(Girth2Rep{2, 3});
  CHECK(writhe(pd_from_rep(mirror(Girth2Rep{2, 3}))) == -writhe(t));
  CHECK(components(pd_from_rep(Girth2Rep{2, 2})) == 1);
  CHECK(components(pd_from_rep(Girth1Rep{2})) == 2);
}

TEST_CASE("Reidemeister I kink") {
  // Twisting a single strand: <K(1)> is the unknot with one kink.
  const PDCode kink = pd_from_rep(Girth1Rep{1});
  CHECK(kink.size() == 1);
  CHECK(jones_oracle(kink) == LaurentPoly::constant(Var::t4, 1));
}

TEST_CASE("Jones span of K(2,3)") {
  CHECK(jones_span(jones_oracle(pd_from_rep(Girth2Rep{2, 3}))) == 5);
}

TEST_CASE("trefoil") {
  const auto ref = jones_oracle(load_pd(fixture("rolfsen/3_1.pd.json")));
  const auto mine = jones_from_bracket(bracket_single_twist(3), writhe(pd_from_rep(Girth1Rep{3})));
  CHECK(equal_up_to_mirror(mine, ref));
}

TEST_CASE("Fox oracle") {
  PDCode unknot;
  unknot.free_loops = 1;
  CHECK(conway_fox(unknot) == Z(0));
  CHECK(conway_fox(pd_from_rep(Girth2Rep{2, 2})) == z_poly("z^2 + 1"));
  CHECK(conway_fox(pd_from_rep(Girth3Rep{{2, 2, 2}, {2, 2, 2}})) == z_poly("9z^4 + 6z^2 + 1"));
  CHECK_THROWS_AS(conway_fox(pd_from_rep(Girth1Rep{2})), usage_error);
}

TEST_CASE("Conway skein relation on twist knots") {
  // Changing one crossing of K(p) turns it into K(p-2); smoothing gives K(p-1).
  for (Label p = 3; p <= 9; p += 2) {
    const auto lhs = conway_fox(pd_from_rep(Girth1Rep{p})) - conway_fox(pd_from_rep(Girth1Rep{p - 2}));
    CHECK(lhs == Z(1) * nabla(p - 1));
  }
}

TEST_CASE("pretzel anchor") {
  // The +-1 bundles merge with the neighbouring twist regions, so
  // K(p q r / e e 0) draws the pretzel (p-e, q, r-e) up to mirror.
  struct Case {
    const char* name;
    Label p, q, r;
  };
  for (const Case& c : {Case{"P_3_3_3", 3, 3, 3}, Case{"P_-2_3_5", -2, 3, 5}, Case{"P_2_3_-3", 2, 3, -3},
                        Case{"P_2_2_2", 2, 2, 2}}) {
    const auto ref = bracket_oracle(pretzel(c.name));
    for (Label e : {1, -1}) {
      const auto b = bracket_oracle(pd_from_rep(Girth3Rep{{c.p + e, c.q, c.r + e}, {e, e, 0}}));
      const bool match = unit_equal(b, ref) || unit_equal(b, ref.invert_variable());
      CHECK_MESSAGE(match, c.name << " e=" << e);
      CHECK(bracket_girth3(Girth3Rep{{c.p + e, c.q, c.r + e}, {e, e, 0}}) == b);
    }
  }
}
