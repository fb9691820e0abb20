#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "knottab/diagram.hpp"
#include "knottab/repr.hpp"

namespace knottab {

inline constexpr int kGirthCrossingCap = 16;

// One maximal stretch of the boundary of the tree neighborhood: an A block
// is a nonempty corner of T, a B block a nonempty corner of the dual tree.
struct BoundaryBlock {
  char kind;  // 'A' or 'B'
  int vertex;
  int corner;
  Label label;  // label of the reduced-tree leg ending at this block
};

struct ReducedTree {
  PlaneTree tree;
  bool mixed_signs = false;
};

struct TaitDecomposition {
  int shading = 0;
  std::vector<int> tree_edges;       // crossings inside U
  std::vector<int> dual_tree_edges;  // the remaining crossings
  ReducedTree reduced;
  ReducedTree reduced_dual;
  std::vector<BoundaryBlock> blocks;  // cyclic A1 B1 ... Ag Bg
  int girth = 0;
  int dual_girth = 0;
};

// tree lists crossing indices forming a spanning tree of tait_graph(pd, shading).
TaitDecomposition decompose(const PDCode& pd, int shading, const std::vector<int>& tree);

// Spanning trees of a plane graph, each as sorted edge indices, in
// lexicographic order. Loops are never included.
std::vector<std::vector<int>> spanning_trees(const PlaneGraph& g);
double spanning_tree_count(const PlaneGraph& g);

struct GirthResult {
  int girth = 0;
  TaitDecomposition witness;
  long trees_examined = 0;
};

GirthResult diagram_girth(const PDCode& pd, int max_crossings = kGirthCrossingCap);

TreePairRep tree_pair_of(const TaitDecomposition& d);
// Girth-2 or girth-3 representation when the decomposition allows it.
std::optional<Rep> rep_from_decomposition(const TaitDecomposition& d);

nlohmann::json to_json(const TaitDecomposition& d);

}  // namespace knottab
