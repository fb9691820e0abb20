#include "knottab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <thread>

namespace knottab {

namespace {

struct ArcTable {
  std::vector<std::array<int, 4>> x;  // crossings with compact arc indices
  int num_arcs = 0;
  std::vector<std::array<std::pair<int, int>, 2>> slots;  // (crossing, arm) per arc
};

ArcTable compact_arcs(const PDCode& pd) {
  validate(pd);
  ArcTable t;
  std::map<int, int> id;
  for (const auto& c : pd.crossings)
    for (int a : c)
      if (id.emplace(a, t.num_arcs).second) ++t.num_arcs;
  t.slots.assign(t.num_arcs, {std::pair{-1, -1}, std::pair{-1, -1}});
  for (int c = 0; c < pd.size(); ++c) {
    std::array<int, 4> row{};
    for (int k = 0; k < 4; ++k) {
      row[k] = id[pd.crossings[c][k]];
      auto& s = t.slots[row[k]];
      (s[0].first < 0 ? s[0] : s[1]) = {c, k};
    }
    t.x.push_back(row);
  }
  return t;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

int loops_of(const ArcTable& t, int free_loops, std::uint64_t state) {
  UnionFind uf(t.num_arcs);
  int comps = t.num_arcs;
  for (std::size_t c = 0; c < t.x.size(); ++c) {
    const auto& x = t.x[c];
    if ((state >> c) & 1u) {
      comps -= uf.unite(x[0], x[1]);
      comps -= uf.unite(x[2], x[3]);
    } else {
      comps -= uf.unite(x[0], x[3]);
      comps -= uf.unite(x[1], x[2]);
    }
  }
  return comps + free_loops;
}

// Coefficients of A^(n - 2*#B) * delta^(loops - 1), grouped by (#B, loops).
using Tally = std::vector<std::vector<std::int64_t>>;

void tally_range(const ArcTable& t, int free_loops, std::uint64_t lo, std::uint64_t hi, Tally& out) {
  const int n = static_cast<int>(t.x.size());
  for (std::uint64_t s = lo; s < hi; ++s) {
    int b = n - std::popcount(s);
    int loops = loops_of(t, free_loops, s);
    ++out[b][loops];
  }
}

LaurentPoly from_tally(const Tally& tally, int n) {
  const LaurentPoly delta = delta_poly();
  std::vector<LaurentPoly> dpow{LaurentPoly::constant(Var::A, 1)};
  LaurentPoly out(Var::A);
  for (int b = 0; b <= n; ++b)
    for (std::size_t loops = 1; loops < tally[b].size(); ++loops) {
      if (!tally[b][loops]) continue;
      while (dpow.size() < loops) dpow.push_back(dpow.back() * delta);
      out += dpow[loops - 1].shifted(n - 2 * b).scaled(tally[b][loops]);
    }
  return out;
}

}  // namespace

int count_loops(const PDCode& pd, const std::vector<bool>& a_smoothing) {
  ArcTable t = compact_arcs(pd);
  if (a_smoothing.size() != t.x.size()) throw usage_error("state size differs from crossing count");
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < a_smoothing.size(); ++c)
    if (a_smoothing[c]) s |= std::uint64_t{1} << c;
  return loops_of(t, pd.free_loops, s);
}

LaurentPoly bracket_state_sum(const PDCode& pd, int jobs) {
  if (pd.size() > kStateSumCap)
    throw usage_error("state sum limited to " + std::to_string(kStateSumCap) + " crossings, got " +
                      std::to_string(pd.size()));
  ArcTable t = compact_arcs(pd);
  const int n = pd.size();
  const int max_loops = t.num_arcs + pd.free_loops + 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  jobs = std::clamp<int>(jobs, 1, 64);
  if (total < 4096) jobs = 1;
  std::vector<Tally> parts(jobs, Tally(n + 1, std::vector<std::int64_t>(max_loops + 1, 0)));
  {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) {
      std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
      pool.emplace_back([&, j, lo, hi] { tally_range(t, pd.free_loops, lo, hi, parts[j]); });
    }
  }
  Tally sum = parts[0];
  for (int j = 1; j < jobs; ++j)
    for (int b = 0; b <= n; ++b)
      for (int l = 0; l <= max_loops; ++l) sum[b][l] += parts[j][b][l];
  return from_tally(sum, n);
}

LaurentPoly bracket_contraction(const PDCode& pd) {
  ArcTable t = compact_arcs(pd);
  const int n = pd.size();
  const LaurentPoly delta = delta_poly();
  if (n == 0) return delta.pow(static_cast<unsigned>(pd.free_loops - 1 + (pd.free_loops == 0)));

  // State: how the open arcs are joined through the processed crossings,
  // as a sorted list of (arc, arc) pairs.
  using Key = std::vector<std::pair<int, int>>;
  std::map<Key, LaurentPoly> states;
  states[{}] = LaurentPoly::constant(Var::A, 1);
  std::vector<int> seen(t.num_arcs, 0);  // processed endpoints per arc
  std::vector<bool> done(n, false);

  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int a : t.x[c]) score += seen[a] == 1;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    const auto& x = t.x[best];
    done[best] = true;
    for (int a : x) ++seen[a];

    std::map<Key, LaurentPoly> next;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // Local multigraph on arcs: old matching edges plus smoothing edges.
        std::vector<std::pair<int, int>> edges(key.begin(), key.end());
        if (smoothing == 0) {
          edges.emplace_back(x[0], x[1]);
          edges.emplace_back(x[2], x[3]);
        } else {
          edges.emplace_back(x[0], x[3]);
          edges.emplace_back(x[1], x[2]);
        }
        std::map<int, std::vector<int>> inc;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
          inc[edges[e].first].push_back(e);
          inc[edges[e].second].push_back(e);
        }
        std::vector<bool> used(edges.size(), false);
        auto walk = [&](int from, int e) {
          int cur = from;
          while (e >= 0 && !used[e]) {
            used[e] = true;
            cur = edges[e].first == cur ? edges[e].second : edges[e].first;
            int nxt = -1;
            for (int f : inc[cur])
              if (!used[f]) nxt = f;
            e = nxt;
          }
          return cur;
        };
        // Open arcs end paths; everything left over closes into loops.
        Key out;
        for (const auto& [a, es] : inc) {
          if (seen[a] != 1 || used[es[0]]) continue;
          int b = walk(a, es[0]);
          out.emplace_back(std::min(a, b), std::max(a, b));
        }
        int loops = 0;
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
          if (!used[e]) {
            ++loops;
            walk(edges[e].first, e);
          }
        std::sort(out.begin(), out.end());
        LaurentPoly term = poly.shifted(smoothing == 0 ? 1 : -1);
        for (int i = 0; i < loops; ++i) term *= delta;
        auto it = next.find(out);
        if (it == next.end())
          next.emplace(std::move(out), std::move(term));
        else
          it->second += term;
      }
    }
    states = std::move(next);
  }
  LaurentPoly total(Var::A);
  for (const auto& [key, poly] : states) {
    if (!key.empty()) throw std::logic_error("open arcs remain after contraction");
    total += poly;
  }
  for (int i = 0; i < pd.free_loops; ++i) total *= delta;
  return divide_exact(total, delta);
}

LaurentPoly bracket_oracle(const PDCode& pd) {
  return pd.size() <= 16 ? bracket_state_sum(pd) : bracket_contraction(pd);
}

Orientation orient(const PDCode& pd) {
  ArcTable t = compact_arcs(pd);
  const int n = pd.size();
  Orientation o;
  o.in.assign(n, {false, false, false, false});
  o.sign.assign(n, 0);
  std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
  auto far_slot = [&](int c, int k) {
    const auto& s = t.slots[t.x[c][k]];
    return s[0] == std::pair{c, k} ? s[1] : s[0];
  };
  // Mark one strand starting by entering (c,k).
  auto run = [&](int c, int k) {
    while (!seen[c][k]) {
      int k2 = (k + 2) % 4;
      seen[c][k] = seen[c][k2] = true;
      o.in[c][k] = true;
      auto [c2, m] = far_slot(c, k2);
      c = c2;
      k = m;
    }
  };
  // Under strands run from arm 0 to arm 2.
  for (int c = 0; c < n; ++c)
    if (!seen[c][0]) {
      ++o.components;
      run(c, 0);
    }
  // Components passing only over: l -> j when j - l == 1 or l - j > 1.
  for (int c = 0; c < n; ++c)
    if (!seen[c][1]) {
      ++o.components;
      int j = pd.crossings[c][1], l = pd.crossings[c][3];
      run(c, (j - l == 1 || l - j > 1) ? 3 : 1);
    }
  for (int c = 0; c < n; ++c) {
    // Under enters at arm 0; the crossing is positive when over enters at 3.
    o.sign[c] = o.in[c][3] ? 1 : -1;
  }
  o.components += pd.free_loops;
  return o;
}

int writhe(const PDCode& pd) {
  auto o = orient(pd);
  return std::accumulate(o.sign.begin(), o.sign.end(), 0);
}

int components(const PDCode& pd) { return orient(pd).components; }

LaurentPoly jones_oracle(const PDCode& pd) { return jones_from_bracket(bracket_oracle(pd), writhe(pd)); }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  for (; e; e >>= 1, b = mulmod(b, b, m))
    if (e & 1) r = mulmod(r, b, m);
  return r;
}

u64 to_mod(std::int64_t v, u64 m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

u64 det_mod(std::vector<std::vector<u64>> a, u64 m) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = (m - det) % m;
    }
    det = mulmod(det, a[col][col], m);
    u64 inv = powmod(a[col][col], m - 2, m);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (!a[r][col]) continue;
      u64 f = mulmod(a[r][col], inv, m);
      for (std::size_t k = col; k < n; ++k) a[r][k] = (a[r][k] + m - mulmod(f, a[col][k], m)) % m;
    }
  }
  return det;
}

// Linear entries alpha + beta t of the Alexander matrix.
struct Entry {
  std::int64_t c0 = 0, c1 = 0;
};

// Coefficients of det(M(t)) via evaluation at 1..deg+1 and Lagrange
// interpolation mod m, lifted to the symmetric range.
std::vector<std::int64_t> det_coeffs(const std::vector<std::vector<Entry>>& M, u64 m) {
  const std::size_t n = M.size();
  const std::size_t pts = n + 1;
  std::vector<u64> xs(pts), ys(pts);
  for (std::size_t i = 0; i < pts; ++i) {
    xs[i] = i + 1;
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        a[r][c] = (to_mod(M[r][c].c0, m) + mulmod(to_mod(M[r][c].c1, m), xs[i], m)) % m;
    ys[i] = det_mod(std::move(a), m);
  }
  std::vector<u64> coef(pts, 0);
  for (std::size_t i = 0; i < pts; ++i) {
    std::vector<u64> basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j < pts; ++j) {
      if (j == i) continue;
      std::vector<u64> nb(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        nb[k + 1] = (nb[k + 1] + basis[k]) % m;
        nb[k] = (nb[k] + m - mulmod(basis[k], xs[j], m)) % m;
      }
      basis = std::move(nb);
      denom = mulmod(denom, (xs[i] + m - xs[j]) % m, m);
    }
    u64 scale = mulmod(ys[i], powmod(denom, m - 2, m), m);
    for (std::size_t k = 0; k < basis.size() && k < pts; ++k) coef[k] = (coef[k] + mulmod(basis[k], scale, m)) % m;
  }
  std::vector<std::int64_t> out;
  for (u64 c : coef) out.push_back(c > m / 2 ? -static_cast<std::int64_t>(m - c) : static_cast<std::int64_t>(c));
  return out;
}

}  // namespace

LaurentPoly alexander_fox(const PDCode& pd, int max_crossings) {
  Orientation o = orient(pd);
  if (o.components != 1) throw usage_error("Fox oracle supports knots only");
  if (pd.size() > max_crossings)
    throw usage_error("Fox oracle limited to " + std::to_string(max_crossings) + " crossings");
  const int n = pd.size();
  if (n <= 1) return LaurentPoly::constant(Var::x, 1);
  ArcTable t = compact_arcs(pd);
  UnionFind uf(t.num_arcs);
  for (const auto& x : t.x) uf.unite(x[1], x[3]);
  std::map<int, int> gen;
  for (int a = 0; a < t.num_arcs; ++a) gen.emplace(uf.find(a), 0);
  int g = 0;
  for (auto& [root, idx] : gen) idx = g++;
  std::vector<std::vector<Entry>> M(n, std::vector<Entry>(g));
  for (int c = 0; c < n; ++c) {
    const auto& x = t.x[c];
    // Incoming under sits at the arm marked as entered among 0 and 2.
    int iu = o.in[c][0] ? 0 : 2;
    int over = gen[uf.find(x[1])];
    int in_u = gen[uf.find(x[iu])];
    int out_u = gen[uf.find(x[(iu + 2) % 4])];
    if (o.sign[c] > 0) {
      M[c][over].c0 += 1;
      M[c][over].c1 -= 1;
      M[c][in_u].c1 += 1;
      M[c][out_u].c0 -= 1;
    } else {
      M[c][over].c0 -= 1;
      M[c][over].c1 += 1;
      M[c][in_u].c0 += 1;
      M[c][out_u].c1 -= 1;
    }
  }
  std::vector<std::vector<Entry>> minor;
  for (int r = 1; r < n; ++r) minor.emplace_back(M[r].begin() + 1, M[r].end());
  if (minor.empty() || minor.size() != minor[0].size()) throw std::logic_error("Alexander minor is not square");
  auto c1 = det_coeffs(minor, (u64{1} << 61) - 1);
  auto c2 = det_coeffs(minor, (u64{1} << 62) - 57);
  if (c1 != c2) throw std::overflow_error("Alexander coefficients exceed the modular range");
  LaurentPoly::Terms terms;
  for (std::size_t k = 0; k < c1.size(); ++k)
    if (c1[k]) terms[static_cast<std::int64_t>(k)] = c1[k];
  LaurentPoly d(Var::x, terms);
  if (d.is_zero()) throw std::logic_error("Alexander determinant vanished");
  auto ex = d.extremes();
  d = d.shifted(-(ex.min_exp + ex.max_exp) / 2);
  if (ex.span % 2) throw std::logic_error("Alexander polynomial of odd span");
  if (d.eval_at_one() < 0) d = -d;
  if (d.invert_variable() != d) throw std::logic_error("Alexander polynomial is not symmetric");
  return d;
}

LaurentPoly conway_from_alexander(const LaurentPoly& alex) {
  // t^k + t^-k as a polynomial in s = z^2: x_1 = s + 2, x_{k+1} = (s+2) x_k - x_{k-1}.
  const LaurentPoly s2 = LaurentPoly(Var::z, {{0, 2}, {1, 1}});
  LaurentPoly out = LaurentPoly::constant(Var::z, alex.coeff(0));
  LaurentPoly prev = LaurentPoly::constant(Var::z, 2), cur = s2;
  const std::int64_t h = alex.is_zero() ? 0 : alex.extremes().max_exp;
  for (std::int64_t k = 1; k <= h; ++k) {
    out += cur.scaled(alex.coeff(k));
    LaurentPoly nxt = s2 * cur - prev;
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  return out.substitute_power(2);
}

LaurentPoly conway_fox(const PDCode& pd, int max_crossings) {
  return conway_from_alexander(alexander_fox(pd, max_crossings));
}

}  // namespace knottab
