#include "knottab/repr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "knottab/laurent.hpp"

namespace knottab {

int PlaneTree::leaf_count() const {
  int n = 0;
  for (int v = 0; v < num_vertices; ++v) n += degree(v) == 1;
  return n;
}

void validate(const TreePairRep& t) {
  for (const PlaneTree* tr : {&t.top, &t.bottom}) {
    if (static_cast<int>(tr->rotation.size()) != tr->num_vertices)
      throw std::invalid_argument("tree rotation system has the wrong size");
    if (tr->num_vertices > 1 && static_cast<int>(tr->edges.size()) != tr->num_vertices - 1)
      throw std::invalid_argument("tree edge count is not |V|-1");
    for (int v = 0; v < tr->num_vertices; ++v)
      if (tr->degree(v) == 2) throw std::invalid_argument("tree has a valence-2 vertex");
    if (tr->leaf_count() != t.girth) throw std::invalid_argument("leaf count differs from girth");
  }
}

namespace {

class RepParser {
 public:
  explicit RepParser(std::string_view s) : s_(s) {}

  Rep parse() {
    skip();
    Rep out;
    if (eat('(')) {
      std::vector<Label> v = list(')', ',');
      if (v.size() == 1)
        out = Girth1Rep{v[0]};
      else if (v.size() == 2)
        out = Girth2Rep{v[0], v[1]};
      else
        fail("expected one or two labels");
    } else if (eat('[')) {
      std::vector<Label> top = list('/', 0);
      std::vector<Label> bottom = list(']', 0);
      if (top.size() != 3 || bottom.size() != 3) fail("girth-3 rows need three labels each");
      out = Girth3Rep{{top[0], top[1], top[2]}, {bottom[0], bottom[1], bottom[2]}};
    } else {
      fail("expected '(' or '['");
    }
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& m) const { throw parse_error(m, pos_); }

  Label integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    Label v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000) fail("label too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return neg ? -v : v;
  }

  // sep == 0 means whitespace-separated; commas are also tolerated there.
  std::vector<Label> list(char close, char sep) {
    std::vector<Label> v;
    while (true) {
      if (eat(close)) break;
      if (!v.empty() && sep && !eat(sep)) fail(std::string("expected '") + sep + "'");
      if (!sep) eat(',');
      v.push_back(integer());
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join(const std::array<Label, 3>& a) {
  return std::to_string(a[0]) + " " + std::to_string(a[1]) + " " + std::to_string(a[2]);
}

}  // namespace

Rep parse_rep(std::string_view text) { return RepParser(text).parse(); }

std::string to_string(const Rep& r) {
  struct V {
    std::string operator()(const Girth1Rep& g) const { return "(" + std::to_string(g.p) + ")"; }
    std::string operator()(const Girth2Rep& g) const {
      return "(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
    }
    std::string operator()(const Girth3Rep& g) const {
      return "[" + join(g.top) + " / " + join(g.bottom) + "]";
    }
  };
  return std::visit(V{}, r);
}

int girth_of(const Rep& r) { return static_cast<int>(r.index()) + 1; }

std::vector<Label> labels_of(const Rep& r) {
  struct V {
    std::vector<Label> operator()(const Girth1Rep& g) const { return {g.p}; }
    std::vector<Label> operator()(const Girth2Rep& g) const { return {g.p, g.q}; }
    std::vector<Label> operator()(const Girth3Rep& g) const {
      return {g.top[0], g.top[1], g.top[2], g.bottom[0], g.bottom[1], g.bottom[2]};
    }
  };
  return std::visit(V{}, r);
}

Girth3Rep d3_rotate(const Girth3Rep& r) {
  return {{r.q(), r.r(), r.p()}, {r.b(), r.c(), r.a()}};
}

Girth3Rep d3_reflect(const Girth3Rep& r) {
  return {{r.p(), r.r(), r.q()}, {r.c(), r.b(), r.a()}};
}

Girth3Rep d3_row_swap(const Girth3Rep& r) {
  return {{r.a(), r.b(), r.c()}, {r.q(), r.r(), r.p()}};
}

std::vector<Girth3Rep> d3_orbit(const Girth3Rep& r) {
  std::set<Girth3Rep> seen{r};
  std::vector<Girth3Rep> todo{r};
  while (!todo.empty()) {
    Girth3Rep cur = todo.back();
    todo.pop_back();
    for (const Girth3Rep& n : {d3_rotate(cur), d3_reflect(cur), d3_row_swap(cur)})
      if (seen.insert(n).second) todo.push_back(n);
  }
  return {seen.begin(), seen.end()};
}

Canonical canonicalize(const Rep& r) {
  Canonical out;
  if (const auto* g1 = std::get_if<Girth1Rep>(&r)) {
    out.rep = *g1;
    out.degenerate = g1->p >= -1 && g1->p <= 1;
  } else if (const auto* g2 = std::get_if<Girth2Rep>(&r)) {
    Girth2Rep g = *g2;
    // K(p, +-1) = K(p -+ 1), applied to either label.
    if (g.q == 1 || g.q == -1) {
      out.rep = Girth1Rep{g.p - g.q};
    } else if (g.p == 1 || g.p == -1) {
      out.rep = Girth1Rep{g.q - g.p};
    } else {
      if (g.q < g.p) std::swap(g.p, g.q);
      out.rep = g;
      out.degenerate = g.p == 0 || g.q == 0;
    }
    if (const auto* red = std::get_if<Girth1Rep>(&out.rep)) out.degenerate = red->p >= -1 && red->p <= 1;
  } else {
    const auto orbit = d3_orbit(std::get<Girth3Rep>(r));
    out.rep = orbit.front();
  }
  out.key = to_string(out.rep);
  return out;
}

Rep mirror(const Rep& r) {
  struct V {
    Rep operator()(const Girth1Rep& g) const { return Girth1Rep{-g.p}; }
    Rep operator()(const Girth2Rep& g) const { return Girth2Rep{-g.p, -g.q}; }
    Rep operator()(const Girth3Rep& g) const {
      return Girth3Rep{{-g.top[0], -g.top[1], -g.top[2]}, {-g.bottom[0], -g.bottom[1], -g.bottom[2]}};
    }
  };
  return std::visit(V{}, r);
}

nlohmann::json to_json(const Rep& r) {
  using nlohmann::json;
  if (const auto* g1 = std::get_if<Girth1Rep>(&r)) return json{{"girth", 1}, {"labels", {g1->p}}};
  if (const auto* g2 = std::get_if<Girth2Rep>(&r)) return json{{"girth", 2}, {"labels", {g2->p, g2->q}}};
  const auto& g3 = std::get<Girth3Rep>(r);
  return json{{"girth", 3}, {"top", g3.top}, {"bottom", g3.bottom}};
}

Rep rep_from_json(const nlohmann::json& j) {
  int g = j.at("girth").get<int>();
  if (g == 1) return Girth1Rep{j.at("labels").at(0).get<Label>()};
  if (g == 2) {
    const auto& l = j.at("labels");
    if (l.size() != 2) throw std::invalid_argument("girth-2 JSON needs two labels");
    return Girth2Rep{l.at(0).get<Label>(), l.at(1).get<Label>()};
  }
  if (g == 3) {
    Girth3Rep r;
    r.top = j.at("top").get<std::array<Label, 3>>();
    r.bottom = j.at("bottom").get<std::array<Label, 3>>();
    return r;
  }
  throw std::invalid_argument("unsupported girth in representation JSON");
}

nlohmann::json to_json(const PlaneTree& t) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : t.edges) edges.push_back({e.u, e.v, e.label});
  return {{"vertices", t.num_vertices}, {"edges", edges}, {"rotation", t.rotation}};
}

nlohmann::json to_json(const TreePairRep& t) {
  return {{"girth", t.girth}, {"top", to_json(t.top)}, {"bottom", to_json(t.bottom)}};
}

}  // namespace knottab
