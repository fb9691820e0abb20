#include "knottab/girth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "knottab/laurent.hpp"

namespace knottab {

namespace {

// Corner structure of a spanning tree inside a plane graph.
struct Side {
  const PlaneGraph* g = nullptr;
  std::vector<bool> in_tree;
  std::vector<std::vector<int>> tree_pos;  // rotation indices of tree darts
  std::vector<std::vector<bool>> nonempty;
  std::vector<int> chain_of_leaf;  // reduced edge at a tree leaf, -1 elsewhere
  ReducedTree reduced;
  std::map<std::pair<int, int>, Label> corner_label;

  int corner_of(int v, int pos) const {
    const auto& tp = tree_pos[v];
    if (tp.empty()) return 0;
    int k = static_cast<int>(tp.size()) - 1;
    for (int i = 0; i < static_cast<int>(tp.size()); ++i)
      if (tp[i] <= pos) k = i;
    return k;
  }
};

Side build_side(const PlaneGraph& g, std::vector<bool> in_tree) {
  Side s;
  s.g = &g;
  s.in_tree = std::move(in_tree);
  const int nv = g.num_vertices;
  s.tree_pos.resize(nv);
  s.nonempty.resize(nv);
  for (int v = 0; v < nv; ++v) {
    const auto& rot = g.rotation[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
      if (s.in_tree[rot[i].edge]) s.tree_pos[v].push_back(i);
    s.nonempty[v].assign(std::max<std::size_t>(1, s.tree_pos[v].size()), false);
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
      if (!s.in_tree[rot[i].edge]) s.nonempty[v][s.corner_of(v, i)] = true;
  }

  PlaneTree& t = s.reduced.tree;
  if (nv == 1) {
    // A single vertex pads to one zero edge with two leaves.
    t.num_vertices = 2;
    t.edges.push_back({0, 1, 0});
    t.rotation = {{0}, {0}};
    s.corner_label[{0, 0}] = 0;
    return s;
  }

  auto tdeg = [&](int v) { return static_cast<int>(s.tree_pos[v].size()); };
  auto has_free = [&](int v) {
    return std::any_of(s.nonempty[v].begin(), s.nonempty[v].end(), [](bool b) { return b; });
  };
  std::vector<int> node(nv, -1);
  for (int v = 0; v < nv; ++v)
    if (tdeg(v) != 2 || has_free(v)) {
      node[v] = t.num_vertices++;
      t.rotation.emplace_back();
    }

  // Follow each tree dart out of a kept vertex through suppressed ones.
  std::map<std::pair<int, int>, int> dart_chain;  // (vertex, rotation index) -> reduced edge
  for (int v = 0; v < nv; ++v) {
    if (node[v] < 0) continue;
    for (int pos : s.tree_pos[v]) {
      if (dart_chain.count({v, pos})) continue;
      Label sum = 0;
      int sgn_seen = 0;
      bool mixed = false;
      int cur = v, cur_pos = pos;
      while (true) {
        const Dart d = g.rotation[cur][cur_pos];
        const auto& e = g.edges[d.edge];
        if (sgn_seen && e.sign != sgn_seen) mixed = true;
        sgn_seen = e.sign;
        sum += e.sign;
        const int nxt = d.end == 0 ? e.v : e.u;
        const auto& nrot = g.rotation[nxt];
        const int back = static_cast<int>(std::find(nrot.begin(), nrot.end(), Dart{d.edge, 1 - d.end}) - nrot.begin());
        if (node[nxt] >= 0) {
          int id = static_cast<int>(t.edges.size());
          t.edges.push_back({node[v], node[nxt], sum});
          dart_chain[{v, pos}] = id;
          dart_chain[{nxt, back}] = id;
          break;
        }
        const auto& tp = s.tree_pos[nxt];
        cur_pos = tp[0] == back ? tp[1] : tp[0];
        cur = nxt;
      }
      s.reduced.mixed_signs |= mixed;
    }
  }

  s.chain_of_leaf.assign(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (node[v] < 0) continue;
    const auto& tp = s.tree_pos[v];
    if (tp.size() == 1) {
      int id = dart_chain.at({v, tp[0]});
      s.chain_of_leaf[v] = id;
      t.rotation[node[v]].push_back(id);
      if (s.nonempty[v][0]) s.corner_label[{v, 0}] = t.edges[id].label;
      continue;
    }
    for (int k = 0; k < static_cast<int>(tp.size()); ++k) {
      t.rotation[node[v]].push_back(dart_chain.at({v, tp[k]}));
      if (!s.nonempty[v][k]) continue;
      int leaf = t.num_vertices++;
      t.rotation.emplace_back();
      int id = static_cast<int>(t.edges.size());
      t.edges.push_back({node[v], leaf, 0});
      t.rotation[node[v]].push_back(id);
      t.rotation[leaf].push_back(id);
      s.corner_label[{v, k}] = 0;
    }
  }
  return s;
}

bool is_spanning_tree(const PlaneGraph& g, const std::vector<bool>& in_tree) {
  std::vector<int> p(g.num_vertices);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  int count = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!in_tree[e]) continue;
    int a = find(g.edges[e].u), b = find(g.edges[e].v);
    if (a == b) return false;
    p[a] = b;
    ++count;
  }
  return count == g.num_vertices - 1;
}

}  // namespace

TaitDecomposition decompose(const PDCode& pd, int shading, const std::vector<int>& tree) {
  if (shading != 0 && shading != 1) throw usage_error("shading must be 0 or 1");
  const TaitGraph tg = tait_graph(pd, shading);
  const TaitGraph dual = tait_graph(pd, 1 - shading);
  const PlaneGraph& g = tg.graph;
  for (int v = 0; v < g.num_vertices; ++v)
    if (g.degree(v) == 1) throw invalid_pd("Tait graph has a valence-1 vertex");
  for (int v = 0; v < dual.graph.num_vertices; ++v)
    if (dual.graph.degree(v) == 1) throw invalid_pd("diagram has a nugatory crossing");

  const int n = pd.size();
  std::vector<bool> in_tree(n, false);
  for (int e : tree) {
    if (e < 0 || e >= n || in_tree[e]) throw usage_error("tree edge list is not a set of crossings");
    in_tree[e] = true;
  }
  if (!is_spanning_tree(g, in_tree)) throw usage_error("edge set is not a spanning tree of the Tait graph");
  std::vector<bool> in_dual(n);
  for (int e = 0; e < n; ++e) in_dual[e] = !in_tree[e];
  if (!is_spanning_tree(dual.graph, in_dual)) throw std::logic_error("complement is not a dual spanning tree");

  const Side side = build_side(g, in_tree);
  const Side dside = build_side(dual.graph, in_dual);

  TaitDecomposition d;
  d.shading = shading;
  for (int e = 0; e < n; ++e) (in_tree[e] ? d.tree_edges : d.dual_tree_edges).push_back(e);
  d.reduced = side.reduced;
  d.reduced_dual = dside.reduced;
  d.girth = d.reduced.tree.leaf_count();
  d.dual_girth = d.reduced_dual.tree.leaf_count();
  if (d.girth != d.dual_girth) throw std::logic_error("tree and dual tree girths differ");
  if (n == 0 || g.num_vertices == 1 || dual.graph.num_vertices == 1) return d;

  // Walk the boundary of the tree neighborhood counterclockwise. Non-tree
  // darts give A entries; each tree edge walked along gives a B entry for
  // the white region on its right.
  const auto sr = checkerboard(pd)[shading];
  const auto sides = arc_regions(pd, sr);
  struct Entry {
    char kind;
    int vertex, corner;
  };
  std::vector<Entry> walk;
  const int root = 0;
  int u = root;
  int in_pos = side.tree_pos[root].empty() ? -1 : side.tree_pos[root].back();
  const int start_pos = in_pos;
  do {
    const auto& rot = g.rotation[u];
    const int deg = static_cast<int>(rot.size());
    int j = (in_pos + 1) % deg;
    for (; !in_tree[rot[j].edge]; j = (j + 1) % deg) walk.push_back({'A', u, side.corner_of(u, j)});
    const Dart out = rot[j];
    const int arc = tg.corner_arc[u][(j + deg - 1) % deg];
    const auto [r1, r2] = sides.at(arc);
    const int white = sr.black[r1] ? r2 : r1;
    const int w = dual.region_vertex.at(white);
    const auto& wrot = dual.graph.rotation[w];
    const int wpos = static_cast<int>(
        std::find_if(wrot.begin(), wrot.end(), [&](const Dart& x) { return x.edge == out.edge; }) - wrot.begin());
    walk.push_back({'B', w, dside.corner_of(w, wpos)});
    const auto& e = g.edges[out.edge];
    u = out.end == 0 ? e.v : e.u;
    const auto& nrot = g.rotation[u];
    in_pos = static_cast<int>(std::find(nrot.begin(), nrot.end(), Dart{out.edge, 1 - out.end}) - nrot.begin());
  } while (!(u == root && in_pos == start_pos));

  // Compress into cyclic runs.
  std::vector<Entry> runs;
  for (const Entry& x : walk)
    if (runs.empty() || runs.back().kind != x.kind || runs.back().vertex != x.vertex ||
        runs.back().corner != x.corner)
      runs.push_back(x);
  while (runs.size() > 1 && runs.front().kind == runs.back().kind && runs.front().vertex == runs.back().vertex &&
         runs.front().corner == runs.back().corner)
    runs.pop_back();
  // Start at an A run.
  auto first_a = std::find_if(runs.begin(), runs.end(), [](const Entry& x) { return x.kind == 'A'; });
  std::rotate(runs.begin(), first_a, runs.end());
  for (const Entry& x : runs) {
    const Side& s = x.kind == 'A' ? side : dside;
    d.blocks.push_back({x.kind, x.vertex, x.corner, s.corner_label.at({x.vertex, x.corner})});
  }
  return d;
}

std::vector<std::vector<int>> spanning_trees(const PlaneGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  const int nv = g.num_vertices;
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::vector<bool> excluded(m, false);

  auto connected_without_excluded = [&]() {
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    int comps = nv;
    for (int e = 0; e < m; ++e) {
      if (excluded[e]) continue;
      int a = find(g.edges[e].u), b = find(g.edges[e].v);
      if (a != b) {
        p[a] = b;
        --comps;
      }
    }
    return comps == 1;
  };

  // Union-find snapshots per recursion depth keep the include branch cheap.
  auto rec = [&](auto&& self, int e, std::vector<int> comp) -> void {
    if (static_cast<int>(chosen.size()) == nv - 1) {
      out.push_back(chosen);
      return;
    }
    if (e == m) return;
    const int a = comp[g.edges[e].u], b = comp[g.edges[e].v];
    if (a != b) {
      std::vector<int> merged = comp;
      for (int& c : merged)
        if (c == a) c = b;
      chosen.push_back(e);
      self(self, e + 1, std::move(merged));
      chosen.pop_back();
    }
    excluded[e] = true;
    if (connected_without_excluded()) self(self, e + 1, comp);
    excluded[e] = false;
  };
  if (nv == 0) return out;
  std::vector<int> comp(nv);
  std::iota(comp.begin(), comp.end(), 0);
  rec(rec, 0, comp);
  return out;
}

double spanning_tree_count(const PlaneGraph& g) {
  const int n = g.num_vertices;
  if (n <= 1) return 1.0;
  std::vector<std::vector<long double>> lap(n - 1, std::vector<long double>(n - 1, 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u < n - 1) lap[e.u][e.u] += 1;
    if (e.v < n - 1) lap[e.v][e.v] += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      lap[e.u][e.v] -= 1;
      lap[e.v][e.u] -= 1;
    }
  }
  long double det = 1;
  const int m = n - 1;
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::fabs(lap[r][c]) > std::fabs(lap[piv][c])) piv = r;
    if (lap[piv][c] == 0) return 0.0;
    if (piv != c) {
      std::swap(lap[piv], lap[c]);
      det = -det;
    }
    det *= lap[c][c];
    for (int r = c + 1; r < m; ++r) {
      long double f = lap[r][c] / lap[c][c];
      for (int k = c; k < m; ++k) lap[r][k] -= f * lap[c][k];
    }
  }
  return static_cast<double>(std::round(det));
}

GirthResult diagram_girth(const PDCode& pd, int max_crossings) {
  if (pd.size() > max_crossings) {
    double est = 0;
    for (int s = 0; s < 2; ++s) est += spanning_tree_count(tait_graph(pd, s).graph);
    throw usage_error("girth search limited to " + std::to_string(max_crossings) + " crossings; diagram has " +
                      std::to_string(pd.size()) + " crossings and about " + std::to_string(static_cast<long long>(est)) +
                      " spanning trees");
  }
  GirthResult best;
  bool found = false;
  std::string last_error;
  for (int s = 0; s < 2; ++s) {
    TaitGraph tg;
    try {
      tg = tait_graph(pd, s);
    } catch (const invalid_pd& e) {
      last_error = e.what();
      continue;
    }
    for (const auto& tree : spanning_trees(tg.graph)) {
      ++best.trees_examined;
      TaitDecomposition d;
      try {
        d = decompose(pd, s, tree);
      } catch (const invalid_pd& e) {
        last_error = e.what();
        break;
      }
      // Enumeration order is lexicographic, so the first minimum wins.
      if (!found || d.girth < best.girth) {
        best.girth = d.girth;
        best.witness = std::move(d);
        found = true;
      }
    }
  }
  if (!found) throw invalid_pd("no shading admits a decomposition: " + last_error);
  return best;
}

TreePairRep tree_pair_of(const TaitDecomposition& d) {
  TreePairRep t{d.reduced.tree, d.reduced_dual.tree, d.girth};
  validate(t);
  return t;
}

std::optional<Rep> rep_from_decomposition(const TaitDecomposition& d) {
  if (d.girth == 2) {
    if (d.reduced.tree.edges.size() != 1 || d.reduced_dual.tree.edges.size() != 1)
      throw std::logic_error("girth-2 trees must reduce to single edges");
    return Girth2Rep{d.reduced.tree.edges[0].label, d.reduced_dual.tree.edges[0].label};
  }
  if (d.girth == 3) {
    if (d.blocks.size() != 6) throw std::logic_error("girth-3 boundary must have six blocks");
    Girth3Rep r;
    for (int i = 0; i < 3; ++i) {
      if (d.blocks[2 * i].kind != 'A' || d.blocks[2 * i + 1].kind != 'B')
        throw std::logic_error("boundary blocks do not alternate");
      r.top[i] = d.blocks[2 * i].label;
      r.bottom[i] = d.blocks[2 * i + 1].label;
    }
    return r;
  }
  return std::nullopt;
}

nlohmann::json to_json(const TaitDecomposition& d) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : d.blocks)
    blocks.push_back({{"kind", std::string(1, b.kind)}, {"vertex", b.vertex}, {"corner", b.corner}, {"label", b.label}});
  nlohmann::json j{{"shading", d.shading},
                   {"girth", d.girth},
                   {"tree_edges", d.tree_edges},
                   {"dual_tree_edges", d.dual_tree_edges},
                   {"reduced_tree", to_json(d.reduced.tree)},
                   {"reduced_dual_tree", to_json(d.reduced_dual.tree)},
                   {"mixed_signs", d.reduced.mixed_signs || d.reduced_dual.mixed_signs},
                   {"blocks", blocks}};
  if (auto r = rep_from_decomposition(d)) j["rep"] = to_string(*r);
  return j;
}

}  // namespace knottab
