#include "knottab/classify.hpp"

#include <deque>
#include <map>

#include "knottab/diagram.hpp"
#include "knottab/oracle.hpp"

namespace knottab {

namespace {

bool all_even(const Girth3Rep& r) {
  for (Label x : labels_of(r))
    if (x % 2 != 0) return false;
  return true;
}

bool all_positive(const Girth3Rep& r) {
  for (Label x : labels_of(r))
    if (x <= 0) return false;
  return true;
}

Verdict make(VerdictTag t, std::optional<LaurentPoly> ev = std::nullopt, std::string w = {}) {
  if (ev && ev->is_zero()) throw std::logic_error("distinct verdict with zero evidence");
  return {t, std::move(ev), std::move(w)};
}

// Nonzero when the two brackets differ by more than a unit +-A^k.
std::optional<LaurentPoly> bracket_gap(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return x - y;
  const auto ex = x.extremes(), ey = y.extremes();
  LaurentPoly ys = y.shifted(ex.min_exp - ey.min_exp);
  if (ys == x || -ys == x) return std::nullopt;
  LaurentPoly d = x - ys;
  if (ys.coeff(ex.min_exp) != x.coeff(ex.min_exp)) d = x + ys;
  return d;
}

}  // namespace

RepInvariants rep_invariants(const Rep& r, Method m, int budget_crossings) {
  const PDCode pd = pd_from_rep(r);
  RepInvariants inv;
  const Orientation o = orient(pd);
  inv.components = o.components;
  for (int s : o.sign) inv.writhe += s;
  const bool knot = inv.components == 1;
  const auto* g3 = std::get_if<Girth3Rep>(&r);

  if (m == Method::closed) {
    inv.source = "closed_form";
    inv.bracket = bracket_closed(r);
    if (knot) {
      if (const auto* g1 = std::get_if<Girth1Rep>(&r)) {
        inv.conway = nabla(g1->p);
      } else if (const auto* g2 = std::get_if<Girth2Rep>(&r)) {
        inv.conway = conway_double_twist(g2->p, g2->q);
      } else if (all_even(*g3) && all_positive(*g3)) {
        inv.conway = conway_girth3_even(*g3);
      } else if (pd.size() <= budget_crossings) {
        inv.conway = conway_fox(pd);
      }
    }
  } else {
    if (pd.size() > budget_crossings)
      throw usage_error("diagram has " + std::to_string(pd.size()) + " crossings; oracle budget is " +
                        std::to_string(budget_crossings));
    inv.source = "oracle";
    inv.bracket = bracket_oracle(pd);
    if (knot) inv.conway = conway_fox(pd);
  }
  inv.jones = jones_from_bracket(inv.bracket, inv.writhe);
  inv.span = jones_span(inv.jones);
  return inv;
}

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::EqualBySymmetry: return "EqualBySymmetry";
    case VerdictTag::DistinctByConway: return "DistinctByConway";
    case VerdictTag::DistinctByJones: return "DistinctByJones";
    case VerdictTag::NecessaryConditionFails: return "NecessaryConditionFails";
    case VerdictTag::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"verdict", to_string(v.tag)}};
  if (v.evidence) j["evidence"] = v.evidence->str();
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

std::optional<std::string> d3_word(const Girth3Rep& from, const Girth3Rep& to) {
  std::map<Girth3Rep, std::string> seen{{from, ""}};
  std::deque<Girth3Rep> todo{from};
  while (!todo.empty()) {
    Girth3Rep cur = todo.front();
    todo.pop_front();
    if (cur == to) {
      const std::string& w = seen.at(cur);
      return w.empty() ? std::string("identity") : w;
    }
    const std::string& base = seen.at(cur);
    const std::pair<const char*, Girth3Rep> moves[] = {
        {"rot", d3_rotate(cur)}, {"refl", d3_reflect(cur)}, {"swap", d3_row_swap(cur)}};
    for (const auto& [name, next] : moves)
      if (!seen.count(next)) {
        seen.emplace(next, base.empty() ? std::string(name) : base + " " + name);
        todo.push_back(next);
      }
  }
  return std::nullopt;
}

Verdict classify_girth2_even(Label p, Label q, Label a, Label b) {
  for (Label x : {p, q, a, b})
    if (x <= 0 || x % 2 != 0) throw usage_error("labels must be even and positive");
  if ((p == a && q == b) || (p == b && q == a))
    return make(VerdictTag::EqualBySymmetry, std::nullopt, p == a && q == b ? "identity" : "K(p,q)=K(q,p)");
  LaurentPoly dc = conway_double_twist(p, q) - conway_double_twist(a, b);
  if (!dc.is_zero()) return make(VerdictTag::DistinctByConway, dc);
  // Same product pq, so the spans p+q and a+b differ.
  auto j1 = rep_invariants(Girth2Rep{p, q}).jones, j2 = rep_invariants(Girth2Rep{a, b}).jones;
  return make(VerdictTag::DistinctByJones, j1 - j2,
              "spans " + std::to_string(jones_span(j1)) + " vs " + std::to_string(jones_span(j2)));
}

Verdict transposition_test(const Girth3Rep& r, Perm3 tau) {
  if (!is_transposition(tau)) throw usage_error("expected a transposition");
  if (!all_even(r)) throw usage_error("labels must be even");
  const Girth3Rep image = apply_perm(r, tau);
  const bool positive = all_positive(r);
  LaurentPoly factor = positive ? conway_diff(r, tau) : bracket_diff(r, tau);
  if (factor.is_zero()) {
    if (auto w = d3_word(r, image)) return make(VerdictTag::EqualBySymmetry, std::nullopt, *w);
    return make(VerdictTag::Unresolved, std::nullopt, "difference vanishes without a symmetry");
  }
  return make(positive ? VerdictTag::DistinctByConway : VerdictTag::DistinctByJones, factor);
}

Verdict cycle_obstruction(const Girth3Rep& r, Perm3 cycle) {
  if (cycle != Perm3::cycle_cab && cycle != Perm3::cycle_bca) throw usage_error("expected a 3-cycle");
  if (!all_even(r)) throw usage_error("labels must be even");
  const Girth3Rep image = apply_perm(r, cycle);
  const std::array<Label, 3> row = cycle == Perm3::cycle_cab ? image.bottom : r.bottom;
  const Label det = int_det3(r.top, row);
  if (det != 0) {
    if (all_positive(r)) return make(VerdictTag::DistinctByConway, conway_diff(r, cycle));
    return make(VerdictTag::DistinctByConway, LaurentPoly::monomial(Var::z, 2, det / 4),
                "integer determinant " + std::to_string(det));
  }
  LaurentPoly sdet = s_det3(r.top, row);
  if (!sdet.is_zero()) return make(VerdictTag::DistinctByJones, bracket_diff(r, cycle), "S-determinant " + sdet.str());
  return make(VerdictTag::Unresolved, std::nullopt, "both determinants vanish");
}

Verdict row_swap_test(const Girth3Rep& r) {
  if (!all_even(r)) throw usage_error("labels must be even");
  if (r.p() == r.a()) return make(VerdictTag::EqualBySymmetry, std::nullopt, "p = a");
  const Girth3Rep image{{r.a(), r.q(), r.r()}, {r.p(), r.b(), r.c()}};
  const LaurentPoly diff = bracket_diff_row_exchange(r);
  const bool clause1 = r.q() == 0 && r.c() == 0;
  const bool clause2 = r.q() == r.c() && r.b() == r.r();
  if (!clause1 && !clause2) {
    if (diff.is_zero()) return make(VerdictTag::Unresolved, std::nullopt, "brackets agree although both clauses fail");
    return make(VerdictTag::NecessaryConditionFails, diff);
  }
  if (auto w = d3_word(r, image)) return make(VerdictTag::EqualBySymmetry, std::nullopt, *w);
  if (!diff.is_zero()) return make(VerdictTag::DistinctByJones, diff);
  return make(VerdictTag::Unresolved, std::nullopt, clause1 ? "clause q=c=0 holds" : "clause q=c, b=r holds");
}

Verdict compare(const Rep& r1, const Rep& r2, bool mirror_ok, int budget_crossings) {
  const Canonical c1 = canonicalize(r1), c2 = canonicalize(r2);
  if (c1.key == c2.key) {
    std::string w = "canonical form " + c1.key;
    if (const auto* a = std::get_if<Girth3Rep>(&r1))
      if (const auto* b = std::get_if<Girth3Rep>(&r2))
        if (auto word = d3_word(*a, *b)) w = *word;
    return make(VerdictTag::EqualBySymmetry, std::nullopt, w);
  }
  if (mirror_ok && canonicalize(mirror(r2)).key == c1.key)
    return make(VerdictTag::EqualBySymmetry, std::nullopt, "mirror, canonical form " + c1.key);

  RepInvariants i1, i2;
  try {
    i1 = rep_invariants(r1, Method::closed, budget_crossings);
    i2 = rep_invariants(r2, Method::closed, budget_crossings);
  } catch (const usage_error& e) {
    return make(VerdictTag::Unresolved, std::nullopt, e.what());
  }
  if (i1.conway && i2.conway) {
    LaurentPoly d = *i1.conway - *i2.conway;
    if (!d.is_zero()) return make(VerdictTag::DistinctByConway, d);
  }
  if (i1.components == 1 && i2.components == 1) {
    LaurentPoly d = i1.jones - i2.jones;
    if (d.is_zero()) return make(VerdictTag::Unresolved, std::nullopt, "Conway and Jones agree");
    if (mirror_ok) {
      LaurentPoly dm = i1.jones - i2.jones.invert_variable();
      if (dm.is_zero()) return make(VerdictTag::Unresolved, std::nullopt, "Jones agrees with the mirror");
    }
    return make(VerdictTag::DistinctByJones, d,
                "spans " + std::to_string(i1.span) + " vs " + std::to_string(i2.span));
  }
  // Links: the Jones polynomial depends on orientations, so compare brackets
  // up to a unit.
  auto gap = bracket_gap(i1.bracket, i2.bracket);
  if (gap && mirror_ok && !bracket_gap(i1.bracket, i2.bracket.invert_variable())) gap.reset();
  if (gap) return make(VerdictTag::DistinctByJones, *gap, "brackets differ beyond a unit");
  return make(VerdictTag::Unresolved, std::nullopt, "brackets agree up to a unit");
}

}  // namespace knottab
