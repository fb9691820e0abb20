#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knottab/repr.hpp"

namespace knottab {

class invalid_pd : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Crossings are listed counterclockwise starting at the incoming under-strand.
// free_loops counts crossingless components.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  int size() const { return static_cast<int>(crossings.size()); }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

void validate(const PDCode& pd);
PDCode parse_pd_text(std::string_view text);
std::string to_text(const PDCode& pd);
nlohmann::json to_json(const PDCode& pd);
PDCode pd_from_json(const nlohmann::json& j);
PDCode load_pd(const std::string& path);

struct Dart {
  int edge;
  int end;  // 0 at edge.u, 1 at edge.v
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Signed plane multigraph; rotation[v] lists darts counterclockwise.
struct PlaneGraph {
  struct Edge {
    int u, v;
    int sign;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rotation;

  int add_vertex();
  int add_edge(int u, int v, int sign);
  int degree(int v) const { return static_cast<int>(rotation.at(v).size()); }
};

// Tait-sign convention, frozen by calibration against the double-twist
// bracket formula: an edge of sign +1 is a crossing whose A-smoothing
// separates its two black regions.
inline constexpr int kTaitConvention = -1;

PlaneGraph template_graph(const Rep& r);
PDCode medial_pd(const PlaneGraph& g);
PDCode pd_from_rep(const Rep& r);

// Corner k of a crossing lies between arms k and k+1.
struct ShadedRegions {
  int num_regions = 0;
  std::vector<std::array<int, 4>> corner_region;
  std::vector<int> black;  // 1 if the region is black in this shading
  int black_count() const;
};

std::array<ShadedRegions, 2> checkerboard(const PDCode& pd);

struct TaitGraph {
  PlaneGraph graph;                           // edge i is crossing i
  std::vector<int> vertex_region;             // region id per vertex
  std::vector<std::vector<int>> corner_arc;   // arc between rotation[v][i] and [i+1]
  std::vector<int> region_vertex;             // vertex per region, -1 if other color
};

TaitGraph tait_graph(const PDCode& pd, int shading);

// Region ids on both sides of every arc (indexed by arc id).
std::vector<std::array<int, 2>> arc_regions(const PDCode& pd, const ShadedRegions& regions);

}  // namespace knottab
