#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "knottab/closedform.hpp"
#include "knottab/girth.hpp"
#include "knottab/oracle.hpp"

using namespace knottab;
using namespace knottab::test;

TEST_CASE("figure knot has girth 3") {
  const Girth3Rep fig{{0, 2, 2}, {0, -1, -1}};
  const GirthResult g = diagram_girth(pd_from_rep(fig));
  CHECK(g.girth == 3);
  CHECK(g.witness.dual_girth == 3);
  const auto rep = rep_from_decomposition(g.witness);
  REQUIRE(rep);
  CHECK(canonicalize(*rep).key == canonicalize(fig).key);
  CHECK(g.witness.blocks.size() == 6);
}

TEST_CASE("double twist templates have girth 2") {
  CHECK(diagram_girth(pd_from_rep(Girth2Rep{2, -2})).girth == 2);
  CHECK(diagram_girth(pd_from_rep(Girth1Rep{3})).girth == 2);
}

TEST_CASE("girth-2 round trip") {
  for (Label p = -4; p <= 4; ++p)
    for (Label q = -4; q <= 4; ++q) {
      const Girth2Rep r{p, q};
      if (canonicalize(r).degenerate) continue;
      const PDCode pd = pd_from_rep(r);
      GirthResult g;
      try {
        g = diagram_girth(pd);
      } catch (const invalid_pd&) {
        continue;  // nugatory template, e.g. a label of +-1 next to a zero
      }
      CHECK(g.girth <= 2);
      const auto back = rep_from_decomposition(g.witness);
      REQUIRE(back);
      CHECK(equal_up_to_mirror(jones_oracle(pd_from_rep(*back)), jones_oracle(pd)));
    }
}

TEST_CASE("trefoil recovers (3) up to mirror") {
  const PDCode pd = load_pd(fixture("rolfsen/3_1.pd.json"));
  const auto back = rep_from_decomposition(diagram_girth(pd).witness);
  REQUIRE(back);
  const auto c = canonicalize(*back).key;
  CHECK((c == canonicalize(Girth1Rep{3}).key || c == canonicalize(Girth1Rep{-3}).key));
}

TEST_CASE("8_18 exploration") {
  const PDCode pd = load_pd(fixture("rolfsen/8_18.pd.json"));
  const GirthResult g = diagram_girth(pd);
  // Minimum over the spanning trees of this one diagram.
  CHECK(g.girth == 4);
  CHECK(!rep_from_decomposition(g.witness));
  const TreePairRep t = tree_pair_of(g.witness);
  CHECK(t.top.leaf_count() == 4);
  CHECK(t.bottom.leaf_count() == 4);
}

TEST_CASE("crossingless circle") {
  PDCode pd;
  pd.free_loops = 1;
  CHECK(diagram_girth(pd).girth == 2);
}

TEST_CASE("nugatory crossings are rejected") {
  const Girth3Rep r{{0, 2, 2}, {0, -1, -1}};
  PDCode pd = pd_from_rep(Girth2Rep{2, 3});
  // A Reidemeister-I kink has a valence-1 vertex in one Tait graph.
  CHECK_THROWS_AS(decompose(pd_from_rep(Girth1Rep{1}), 0, {}), invalid_pd);
  CHECK_NOTHROW(diagram_girth(pd_from_rep(r)));
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(diagram_girth(pd_from_rep(Girth3Rep{{6, 6, 6}, {6, 6, 6}})), usage_error);
}

TEST_CASE("spanning tree counts") {
  const PlaneGraph g = template_graph(Girth2Rep{3, 4});
  // The whole path, or the path minus one edge plus one of 4 parallel edges.
  CHECK(spanning_trees(g).size() == 13);
  CHECK(spanning_tree_count(g) == doctest::Approx(13));
}
