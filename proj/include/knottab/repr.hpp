#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace knottab {

using Label = std::int64_t;

// K(p): a single twist region.
struct Girth1Rep {
  Label p = 0;
  friend bool operator==(const Girth1Rep&, const Girth1Rep&) = default;
  friend auto operator<=>(const Girth1Rep&, const Girth1Rep&) = default;
};

// K(p,q): double twist.
struct Girth2Rep {
  Label p = 0, q = 0;
  friend bool operator==(const Girth2Rep&, const Girth2Rep&) = default;
  friend auto operator<=>(const Girth2Rep&, const Girth2Rep&) = default;
};

// K(p q r / a b c): pair of Y-shaped trees.
struct Girth3Rep {
  std::array<Label, 3> top{};
  std::array<Label, 3> bottom{};
  friend bool operator==(const Girth3Rep&, const Girth3Rep&) = default;
  friend auto operator<=>(const Girth3Rep&, const Girth3Rep&) = default;

  Label p() const { return top[0]; }
  Label q() const { return top[1]; }
  Label r() const { return top[2]; }
  Label a() const { return bottom[0]; }
  Label b() const { return bottom[1]; }
  Label c() const { return bottom[2]; }
};

using Rep = std::variant<Girth1Rep, Girth2Rep, Girth3Rep>;

// Labeled plane tree: rotation[v] lists incident edge ids counterclockwise.
struct PlaneTree {
  struct Edge {
    int u, v;
    Label label;
  };
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;

  int degree(int v) const { return static_cast<int>(rotation.at(v).size()); }
  int leaf_count() const;
};

struct TreePairRep {
  PlaneTree top;
  PlaneTree bottom;
  int girth = 0;
};

// Throws std::invalid_argument when the trees violate the leaf-count rule.
void validate(const TreePairRep& t);

Rep parse_rep(std::string_view text);
std::string to_string(const Rep& r);
int girth_of(const Rep& r);
std::vector<Label> labels_of(const Rep& r);

// Corrected dihedral generators: rotation (q r p / b c a), reflection
// (p r q / c b a), row exchange (a b c / q r p). Sorted, duplicate-free.
Girth3Rep d3_rotate(const Girth3Rep& r);
Girth3Rep d3_reflect(const Girth3Rep& r);
Girth3Rep d3_row_swap(const Girth3Rep& r);
std::vector<Girth3Rep> d3_orbit(const Girth3Rep& r);

struct Canonical {
  Rep rep;
  std::string key;
  bool degenerate = false;
};

Canonical canonicalize(const Rep& r);
Rep mirror(const Rep& r);

nlohmann::json to_json(const Rep& r);
Rep rep_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlaneTree& t);
nlohmann::json to_json(const TreePairRep& t);

}  // namespace knottab
