#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "common.hpp"
#include "knottab/closedform.hpp"
#include "knottab/diagram.hpp"
#include "knottab/oracle.hpp"

using namespace knottab;
using namespace knottab::test;

namespace {

void check_arcs_twice(const PDCode& pd) {
  std::map<int, int> seen;
  for (const auto& x : pd.crossings)
    for (int a : x) ++seen[a];
  for (const auto& [arc, n] : seen) CHECK(n == 2);
}

}  // namespace

TEST_CASE("template sizes") {
  CHECK(pd_from_rep(Girth2Rep{3, -2}).size() == 5);
  CHECK(pd_from_rep(Girth3Rep{{2, 2, 2}, {2, 2, 2}}).size() == 12);
  for (const Rep& r : {Rep{Girth1Rep{5}}, Rep{Girth2Rep{3, -4}}, Rep{Girth3Rep{{0, 2, -3}, {1, -1, 2}}}}) {
    const PDCode pd = pd_from_rep(r);
    CHECK_NOTHROW(validate(pd));
    check_arcs_twice(pd);
  }
}

TEST_CASE("degenerate template") {
  const PDCode pd = pd_from_rep(Girth2Rep{0, 0});
  CHECK(pd.size() == 0);
  CHECK(bracket_oracle(pd) == bracket_double_twist(0, 0));
}

TEST_CASE("text and json round trip") {
  const PDCode pd = pd_from_rep(Girth2Rep{2, 3});
  CHECK(parse_pd_text(to_text(pd)) == pd);
  CHECK(pd_from_json(to_json(pd)) == pd);
  CHECK_THROWS_AS(parse_pd_text("X(1,2,3)"), parse_error);
  CHECK_THROWS_AS(validate(parse_pd_text("X(1,2,3,4)")), invalid_pd);
}

TEST_CASE("checkerboard of the trefoil") {
  const PDCode pd = load_pd(fixture("rolfsen/3_1.pd.json"));
  const auto sh = checkerboard(pd);
  CHECK(sh[0].num_regions == 5);
  const int b0 = sh[0].black_count(), b1 = sh[1].black_count();
  CHECK(std::min(b0, b1) == 2);
  CHECK(std::max(b0, b1) == 3);
  // The shading whose black regions are the three bigons gives a theta graph.
  const int bigons = b0 == 3 ? 0 : 1;
  const TaitGraph t = tait_graph(pd, 1 - bigons);
  CHECK(t.graph.num_vertices == 2);
  CHECK(t.graph.edges.size() == 3);
}

TEST_CASE("crossingless circle") {
  PDCode pd;
  pd.free_loops = 1;
  CHECK(checkerboard(pd)[0].num_regions == 2);
  CHECK(writhe(pd) == 0);
  CHECK(components(pd) == 1);
  CHECK(bracket_state_sum(pd) == A(0));
}

TEST_CASE("Euler count on fixtures") {
  for (const char* name : {"3_1", "5_2", "6_2", "7_4", "8_18"}) {
    const PDCode pd = load_pd(fixture(std::string("rolfsen/") + name + ".pd.json"));
    CHECK(checkerboard(pd)[0].num_regions == pd.size() + 2);
  }
}

TEST_CASE("dual shading gives the planar dual") {
  const PDCode pd = pd_from_rep(Girth3Rep{{0, 2, 2}, {0, -1, -1}});
  const TaitGraph g0 = tait_graph(pd, 0), g1 = tait_graph(pd, 1);
  CHECK(g0.graph.edges.size() == g1.graph.edges.size());
  // V - E + F = 2 with the dual's vertices as faces.
  CHECK(g0.graph.num_vertices + g1.graph.num_vertices == pd.size() + 2);
  for (std::size_t e = 0; e < g0.graph.edges.size(); ++e) CHECK(g0.graph.edges[e].sign == -g1.graph.edges[e].sign);
}

TEST_CASE("double twist Tait graph") {
  // A path of |p| edges whose ends are joined by |q| parallel edges.
  const PlaneGraph g = template_graph(Girth2Rep{3, 4});
  CHECK(g.edges.size() == 7);
  CHECK(g.num_vertices == 4);
}

TEST_CASE("Tait graph round trip") {
  for (const Rep& r : {Rep{Girth2Rep{3, -2}}, Rep{Girth3Rep{{1, 2, -2}, {2, -1, 1}}}}) {
    const PDCode pd = pd_from_rep(r);
    for (int s : {0, 1}) CHECK(bracket_oracle(medial_pd(tait_graph(pd, s).graph)) == bracket_oracle(pd));
  }
  const PDCode ref = load_pd(fixture("rolfsen/6_2.pd.json"));
  CHECK(bracket_oracle(medial_pd(tait_graph(ref, 0).graph)) == bracket_oracle(ref));
}
