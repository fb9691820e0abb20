#include "knottab/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "knottab/laurent.hpp"

namespace knottab {

int PlaneGraph::add_vertex() {
  rotation.emplace_back();
  return num_vertices++;
}

int PlaneGraph::add_edge(int u, int v, int sign) {
  edges.push_back({u, v, sign});
  return static_cast<int>(edges.size()) - 1;
}

namespace {

struct Slot {
  int crossing;
  int pos;
};

// Both occurrences of every arc.
std::map<int, std::array<Slot, 2>> slot_index(const PDCode& pd) {
  std::map<int, std::array<Slot, 2>> idx;
  std::map<int, int> seen;
  for (int c = 0; c < pd.size(); ++c)
    for (int k = 0; k < 4; ++k) {
      int a = pd.crossings[c][k];
      int& n = seen[a];
      if (n >= 2) throw invalid_pd("arc " + std::to_string(a) + " appears more than twice");
      idx[a][n++] = {c, k};
    }
  for (auto [a, n] : seen)
    if (n != 2) throw invalid_pd("arc " + std::to_string(a) + " appears only once");
  return idx;
}

Slot other_slot(const std::map<int, std::array<Slot, 2>>& idx, int arc, Slot s) {
  const auto& pr = idx.at(arc);
  if (pr[0].crossing == s.crossing && pr[0].pos == s.pos) return pr[1];
  return pr[0];
}

int crossing_components(const PDCode& pd, const std::map<int, std::array<Slot, 2>>& idx) {
  std::vector<int> parent(pd.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, pr] : idx) parent[find(pr[0].crossing)] = find(pr[1].crossing);
  int n = 0;
  for (int c = 0; c < pd.size(); ++c) n += find(c) == c;
  return n;
}

struct RegionTrace {
  int count = 0;
  std::vector<std::array<int, 4>> corner_region;
};

RegionTrace trace_regions(const PDCode& pd, const std::map<int, std::array<Slot, 2>>& idx) {
  RegionTrace rt;
  rt.corner_region.assign(pd.size(), {-1, -1, -1, -1});
  for (int c0 = 0; c0 < pd.size(); ++c0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (rt.corner_region[c0][k0] >= 0) continue;
      int id = rt.count++;
      int c = c0, k = k0;
      while (rt.corner_region[c][k] < 0) {
        rt.corner_region[c][k] = id;
        int arm = (k + 1) % 4;
        Slot nxt = other_slot(idx, pd.crossings[c][arm], {c, arm});
        c = nxt.crossing;
        k = nxt.pos;
      }
      if (c != c0 || k != k0) throw invalid_pd("region trace does not close up");
    }
  return rt;
}

int sgn(Label x) { return (x > 0) - (x < 0); }

// Mutable builder used by the templates; contracted vertices are dropped
// at the end while untouched isolated vertices become free loops.
struct GraphBuilder {
  PlaneGraph g;
  std::vector<bool> dead_vertex;
  std::vector<bool> dead_edge;

  int vertex() {
    dead_vertex.push_back(false);
    return g.add_vertex();
  }
  int edge(int u, int v, int sign) {
    dead_edge.push_back(false);
    return g.add_edge(u, v, sign);
  }

  void contract(int e) {
    auto [u, v, s] = g.edges[e];
    if (u == v) throw std::logic_error("cannot contract a loop");
    auto& ru = g.rotation[u];
    auto& rv = g.rotation[v];
    auto iu = std::find(ru.begin(), ru.end(), Dart{e, 0}) - ru.begin();
    auto iv = std::find(rv.begin(), rv.end(), Dart{e, 1}) - rv.begin();
    std::vector<Dart> merged(ru.begin(), ru.begin() + iu);
    merged.insert(merged.end(), rv.begin() + iv + 1, rv.end());
    merged.insert(merged.end(), rv.begin(), rv.begin() + iv);
    merged.insert(merged.end(), ru.begin() + iu + 1, ru.end());
    ru = std::move(merged);
    rv.clear();
    dead_vertex[v] = true;
    dead_edge[e] = true;
    for (auto& ed : g.edges) {
      if (ed.u == v) ed.u = u;
      if (ed.v == v) ed.v = u;
    }
  }

  PlaneGraph finish() const {
    PlaneGraph h;
    std::vector<int> vmap(g.num_vertices, -1), emap(g.edges.size(), -1);
    for (int v = 0; v < g.num_vertices; ++v)
      if (!dead_vertex[v]) vmap[v] = h.add_vertex();
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (!dead_edge[e]) emap[e] = h.add_edge(vmap[g.edges[e].u], vmap[g.edges[e].v], g.edges[e].sign);
    for (int v = 0; v < g.num_vertices; ++v) {
      if (dead_vertex[v]) continue;
      for (Dart d : g.rotation[v]) h.rotation[vmap[v]].push_back({emap[d.edge], d.end});
    }
    return h;
  }
};

PlaneGraph cycle_graph(Label p) {
  GraphBuilder b;
  const int n = static_cast<int>(std::abs(p));
  if (n == 0) {
    b.vertex();
    b.vertex();
    return b.finish();
  }
  std::vector<int> vs;
  for (int i = 0; i < n; ++i) vs.push_back(b.vertex());
  std::vector<int> es;
  for (int i = 0; i < n; ++i) es.push_back(b.edge(vs[i], vs[(i + 1) % n], sgn(p)));
  if (n == 1) {
    b.g.rotation[vs[0]] = {{es[0], 0}, {es[0], 1}};
  } else {
    for (int i = 0; i < n; ++i) b.g.rotation[vs[i]] = {{es[(i + n - 1) % n], 1}, {es[i], 0}};
  }
  return b.finish();
}

struct Leg {
  std::vector<int> vs;  // vs[0] is the attaching vertex
  std::vector<int> es;
  Label label;
};

Leg make_leg(GraphBuilder& b, int root, Label label) {
  Leg leg{{root}, {}, label};
  const int n = std::max<int>(static_cast<int>(std::abs(label)), 1);
  for (int i = 0; i < n; ++i) leg.vs.push_back(b.vertex());
  for (int i = 0; i < n; ++i) leg.es.push_back(b.edge(leg.vs[i], leg.vs[i + 1], sgn(label)));
  for (int i = 1; i < n; ++i) b.g.rotation[leg.vs[i]] = {{leg.es[i - 1], 1}, {leg.es[i], 0}};
  return leg;
}

PlaneGraph girth2_graph(Label p, Label q) {
  GraphBuilder b;
  const int u = b.vertex();
  Leg path = make_leg(b, u, p);
  const int v = path.vs.back();
  std::vector<int> bundle;
  for (Label i = 0; i < std::abs(q); ++i) bundle.push_back(b.edge(u, v, -sgn(q)));
  auto& ru = b.g.rotation[u];
  for (auto it = bundle.rbegin(); it != bundle.rend(); ++it) ru.push_back({*it, 0});
  ru.push_back({path.es.front(), 0});
  auto& rv = b.g.rotation[v];
  rv.push_back({path.es.back(), 1});
  for (int e : bundle) rv.push_back({e, 1});
  if (p == 0) b.contract(path.es.front());
  return b.finish();
}

PlaneGraph girth3_graph(const Girth3Rep& r) {
  GraphBuilder b;
  const int center = b.vertex();
  std::array<Leg, 3> legs;
  for (int i = 0; i < 3; ++i) legs[i] = make_leg(b, center, r.top[i]);
  std::array<int, 3> leaf{legs[0].vs.back(), legs[1].vs.back(), legs[2].vs.back()};
  // bundle[i] joins leaf i and leaf i+1; index 0 is the innermost edge.
  std::array<std::vector<int>, 3> bundle;
  for (int i = 0; i < 3; ++i)
    for (Label k = 0; k < std::abs(r.bottom[i]); ++k)
      bundle[i].push_back(b.edge(leaf[i], leaf[(i + 1) % 3], -sgn(r.bottom[i])));
  for (int i = 0; i < 3; ++i) b.g.rotation[center].push_back({legs[i].es.front(), 0});
  for (int i = 0; i < 3; ++i) {
    auto& rot = b.g.rotation[leaf[i]];
    rot.push_back({legs[i].es.back(), 1});
    // Bundle toward the previous leaf runs inner to outer, then the bundle
    // toward the next leaf runs outer to inner.
    for (int e : bundle[(i + 2) % 3]) rot.push_back({e, 1});
    for (auto it = bundle[i].rbegin(); it != bundle[i].rend(); ++it) rot.push_back({*it, 0});
  }
  for (int i = 0; i < 3; ++i)
    if (r.top[i] == 0) b.contract(legs[i].es.front());
  return b.finish();
}

}  // namespace

PlaneGraph template_graph(const Rep& r) {
  if (const auto* g1 = std::get_if<Girth1Rep>(&r)) return cycle_graph(g1->p);
  if (const auto* g2 = std::get_if<Girth2Rep>(&r)) return girth2_graph(g2->p, g2->q);
  return girth3_graph(std::get<Girth3Rep>(r));
}

PDCode medial_pd(const PlaneGraph& g) {
  // Corner (v,i), between rotation[v][i] and rotation[v][i+1], is an arc.
  std::vector<std::vector<int>> corner(g.num_vertices);
  int narcs = 0;
  PDCode out;
  for (int v = 0; v < g.num_vertices; ++v) {
    if (g.rotation[v].empty()) ++out.free_loops;
    for (std::size_t i = 0; i < g.rotation[v].size(); ++i) corner[v].push_back(narcs++);
  }
  const int n = static_cast<int>(g.edges.size());
  std::vector<std::array<int, 2>> pos(n, {-1, -1});
  for (int v = 0; v < g.num_vertices; ++v)
    for (std::size_t i = 0; i < g.rotation[v].size(); ++i) {
      Dart d = g.rotation[v][i];
      pos[d.edge][d.end] = static_cast<int>(i);
    }

  // Arms counterclockwise: SE, NE, NW, SW with u south and v north.
  std::vector<std::array<int, 4>> arms(n);
  std::vector<int> under_first(n);  // arm index of one end of the under strand
  for (int e = 0; e < n; ++e) {
    const auto& ed = g.edges[e];
    if (ed.sign == 0) throw std::logic_error("zero-signed Tait edge");
    const int du = g.degree(ed.u), dv = g.degree(ed.v);
    const int i1 = pos[e][0], i2 = pos[e][1];
    arms[e] = {corner[ed.u][(i1 + du - 1) % du], corner[ed.v][i2], corner[ed.v][(i2 + dv - 1) % dv],
               corner[ed.u][i1]};
    // Over strand SW-NE leaves SE-NW under.
    under_first[e] = ed.sign * kTaitConvention > 0 ? 0 : 1;
  }

  std::vector<std::array<Slot, 2>> slots(narcs, {Slot{-1, -1}, Slot{-1, -1}});
  std::vector<int> fill(narcs, 0);
  for (int e = 0; e < n; ++e)
    for (int k = 0; k < 4; ++k) slots[arms[e][k]][fill[arms[e][k]]++] = {e, k};

  // Trace strands: leave through arm k, arrive at the far slot, continue
  // through arm pos+2. Each step records (crossing, entry arm).
  struct Step {
    int crossing, entry, arc;
  };
  std::vector<std::vector<Step>> comps;
  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  for (int e0 = 0; e0 < n; ++e0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (used[e0][k0]) continue;
      std::vector<Step> comp;
      int c = e0, k = k0;
      while (!used[c][k]) {
        used[c][k] = true;
        int arc = arms[c][k];
        Slot far = slots[arc][0].crossing == c && slots[arc][0].pos == k ? slots[arc][1] : slots[arc][0];
        used[far.crossing][far.pos] = true;
        comp.push_back({far.crossing, far.pos, arc});
        c = far.crossing;
        k = (far.pos + 2) % 4;
      }
      comps.push_back(std::move(comp));
    }

  const int ncomp = static_cast<int>(comps.size());
  // entry[c][k]: true if the traced direction enters crossing c at arm k.
  auto signs_for = [&](unsigned mask) {
    std::vector<std::array<bool, 4>> enters(n, {false, false, false, false});
    for (int i = 0; i < ncomp; ++i) {
      bool rev = (mask >> i) & 1u;
      for (const Step& s : comps[i]) {
        if (!rev)
          enters[s.crossing][s.entry] = true;
        else
          enters[s.crossing][(s.entry + 2) % 4] = true;
      }
    }
    std::string sig(n, '+');
    std::vector<int> in_under(n);
    for (int e = 0; e < n; ++e) {
      int a = under_first[e];
      int u_in = enters[e][a] ? a : (a + 2) % 4;
      in_under[e] = u_in;
      bool over_from_d = enters[e][(u_in + 3) % 4];
      sig[e] = over_from_d ? '+' : '-';
    }
    return std::make_pair(sig, in_under);
  };

  unsigned best = 0;
  if (ncomp <= 12) {
    std::string best_sig = signs_for(0).first;
    for (unsigned m = 1; m < (1u << ncomp); ++m) {
      std::string s = signs_for(m).first;
      if (s < best_sig) {
        best_sig = s;
        best = m;
      }
    }
  }
  auto in_under = signs_for(best).second;

  // Number arcs consecutively along each oriented component.
  std::vector<int> label(narcs, 0);
  int next = 1;
  for (int i = 0; i < ncomp; ++i) {
    const auto& comp = comps[i];
    if ((best >> i) & 1u) {
      for (auto it = comp.rbegin(); it != comp.rend(); ++it) label[it->arc] = next++;
    } else {
      for (const Step& s : comp) label[s.arc] = next++;
    }
  }
  for (int e = 0; e < n; ++e) {
    std::array<int, 4> t{};
    for (int j = 0; j < 4; ++j) t[j] = label[arms[e][(in_under[e] + j) % 4]];
    out.crossings.push_back(t);
  }
  return out;
}

PDCode pd_from_rep(const Rep& r) { return medial_pd(template_graph(r)); }

void validate(const PDCode& pd) {
  if (pd.free_loops < 0) throw invalid_pd("negative free loop count");
  for (const auto& x : pd.crossings)
    for (int a : x)
      if (a <= 0) throw invalid_pd("arc identifiers must be positive");
  auto idx = slot_index(pd);
  if (pd.crossings.empty()) return;
  RegionTrace rt = trace_regions(pd, idx);
  int pieces = crossing_components(pd, idx);
  if (rt.count != pd.size() + 2 * pieces) throw invalid_pd("region count violates Euler's formula");
}

PDCode parse_pd_text(std::string_view text) {
  PDCode pd;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != 'X') throw parse_error("expected 'X'", i);
    ++i;
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw parse_error("expected '('", i);
    char close = text[i] == '(' ? ')' : ']';
    ++i;
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw parse_error("expected an arc number", i);
      x[k] = std::stoi(std::string(text.substr(start, i - start)));
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (k < 3) {
        if (i >= text.size() || text[i] != ',') throw parse_error("expected ','", i);
        ++i;
      }
    }
    if (i >= text.size() || text[i] != close) throw parse_error("expected closing bracket", i);
    ++i;
    pd.crossings.push_back(x);
    skip();
  }
  if (pd.crossings.empty()) pd.free_loops = 1;
  return pd;
}

std::string to_text(const PDCode& pd) {
  std::ostringstream os;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto& x = pd.crossings[c];
    if (c) os << ' ';
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

nlohmann::json to_json(const PDCode& pd) {
  nlohmann::json j{{"crossings", pd.crossings}};
  if (pd.free_loops) j["free_loops"] = pd.free_loops;
  return j;
}

PDCode pd_from_json(const nlohmann::json& j) {
  PDCode pd;
  pd.crossings = j.at("crossings").get<std::vector<std::array<int, 4>>>();
  pd.free_loops = j.value("free_loops", pd.crossings.empty() ? 1 : 0);
  validate(pd);
  return pd;
}

PDCode load_pd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') return pd_from_json(nlohmann::json::parse(s));
  PDCode pd = parse_pd_text(s);
  validate(pd);
  return pd;
}

int ShadedRegions::black_count() const { return static_cast<int>(std::count(black.begin(), black.end(), 1)); }

std::array<ShadedRegions, 2> checkerboard(const PDCode& pd) {
  validate(pd);
  std::array<ShadedRegions, 2> out;
  if (pd.crossings.empty()) {
    // Nested free loops: alternate colors outward from the innermost disk.
    for (int s = 0; s < 2; ++s) {
      out[s].num_regions = pd.free_loops + 1;
      for (int i = 0; i <= pd.free_loops; ++i) out[s].black.push_back((i + s) % 2 == 0);
    }
    return out;
  }
  auto idx = slot_index(pd);
  if (crossing_components(pd, idx) != 1) throw invalid_pd("checkerboard needs a connected diagram");
  RegionTrace rt = trace_regions(pd, idx);
  std::vector<int> color(rt.count, -1);
  std::vector<std::vector<int>> adj(rt.count);
  for (const auto& cr : rt.corner_region)
    for (int k = 0; k < 4; ++k) {
      adj[cr[k]].push_back(cr[(k + 1) % 4]);
      adj[cr[(k + 1) % 4]].push_back(cr[k]);
    }
  color[0] = 0;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int r = todo.back();
    todo.pop_back();
    for (int s : adj[r]) {
      if (color[s] < 0) {
        color[s] = 1 - color[r];
        todo.push_back(s);
      } else if (color[s] == color[r]) {
        throw invalid_pd("regions admit no checkerboard coloring");
      }
    }
  }
  for (int s = 0; s < 2; ++s) {
    out[s].num_regions = rt.count;
    out[s].corner_region = rt.corner_region;
    for (int r = 0; r < rt.count; ++r) out[s].black.push_back(color[r] == s);
  }
  return out;
}

std::vector<std::array<int, 2>> arc_regions(const PDCode& pd, const ShadedRegions& regions) {
  int max_arc = 0;
  for (const auto& x : pd.crossings)
    for (int a : x) max_arc = std::max(max_arc, a);
  std::vector<std::array<int, 2>> out(max_arc + 1, {-1, -1});
  for (int c = 0; c < pd.size(); ++c)
    for (int k = 0; k < 4; ++k) {
      int arc = pd.crossings[c][(k + 1) % 4];
      out[arc] = {regions.corner_region[c][k], regions.corner_region[c][(k + 1) % 4]};
    }
  return out;
}

TaitGraph tait_graph(const PDCode& pd, int shading) {
  if (shading != 0 && shading != 1) throw usage_error("shading must be 0 or 1");
  auto shades = checkerboard(pd);
  const ShadedRegions& sr = shades[shading];
  TaitGraph tg;
  tg.region_vertex.assign(sr.num_regions, -1);
  for (int r = 0; r < sr.num_regions; ++r)
    if (sr.black[r]) {
      tg.region_vertex[r] = tg.graph.add_vertex();
      tg.vertex_region.push_back(r);
    }
  tg.corner_arc.resize(tg.graph.num_vertices);
  if (pd.crossings.empty()) return tg;

  auto idx = slot_index(pd);
  const int n = pd.size();
  std::vector<int> base(n);  // black corners are base and base+2
  for (int c = 0; c < n; ++c) {
    base[c] = sr.black[sr.corner_region[c][0]] ? 0 : 1;
    int u = tg.region_vertex[sr.corner_region[c][base[c] + 2]];
    int v = tg.region_vertex[sr.corner_region[c][base[c]]];
    tg.graph.add_edge(u, v, base[c] == 0 ? 1 : -1);
  }
  // Walk each black region; the walk runs clockwise around it, so reverse.
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  for (int c0 = 0; c0 < n; ++c0)
    for (int k0 : {base[c0], base[c0] + 2}) {
      if (seen[c0][k0]) continue;
      std::vector<Dart> darts;
      std::vector<int> arcs;
      int c = c0, k = k0;
      while (!seen[c][k]) {
        seen[c][k] = true;
        darts.push_back({c, k == base[c] + 2 ? 0 : 1});
        int arm = (k + 1) % 4;
        int arc = pd.crossings[c][arm];
        arcs.push_back(arc);
        Slot nxt = other_slot(idx, arc, {c, arm});
        c = nxt.crossing;
        k = nxt.pos;
      }
      const int v = tg.region_vertex[sr.corner_region[c0][k0]];
      const int m = static_cast<int>(darts.size());
      auto& rot = tg.graph.rotation[v];
      auto& ca = tg.corner_arc[v];
      for (int i = 0; i < m; ++i) {
        rot.push_back(darts[m - 1 - i]);
        ca.push_back(arcs[(2 * m - 2 - i) % m]);
      }
    }
  return tg;
}

}  // namespace knottab
