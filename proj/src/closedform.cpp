#include "knottab/closedform.hpp"

#include <map>
#include <mutex>

namespace knottab {

namespace {

LaurentPoly mono(Var v, std::int64_t e, std::int64_t c = 1) { return LaurentPoly::monomial(v, e, c); }
LaurentPoly A(std::int64_t e, std::int64_t c = 1) { return mono(Var::A, e, c); }
LaurentPoly Z(std::int64_t e, std::int64_t c = 1) { return mono(Var::z, e, c); }

void require_even_positive(const Girth3Rep& r) {
  for (Label x : labels_of(r))
    if (x <= 0 || x % 2 != 0) throw usage_error("labels must be even and positive");
}

// Multiply an integer by (z/2)^2, asserting exactness.
LaurentPoly quarter_z2(Label v) {
  if (v % 4 != 0) throw std::domain_error("(z/2)^2 coefficient is not integral");
  return Z(2, v / 4);
}

LaurentPoly one_minus_delta_sq() { return A(0) - delta_poly().pow(2); }

LaurentPoly one_minus_printed_sq() {
  LaurentPoly d = A(2, -1) + A(-1, -1);
  return A(0) - d.pow(2);
}

LaurentPoly det3(const std::array<LaurentPoly, 3>& x, const std::array<LaurentPoly, 3>& y) {
  // rows x, y, (1,1,1)
  return x[0] * (y[1] - y[2]) - x[1] * (y[0] - y[2]) + x[2] * (y[0] - y[1]);
}

LaurentPoly diff_core(const Girth3Rep& r, Perm3 p, const LaurentPoly& factor) {
  Label w = r.p() + r.q() + r.r() + r.a() + r.b() + r.c();
  auto X = [](Label x) { return s_hat(x); };
  LaurentPoly body(Var::A);
  switch (p) {
    case Perm3::identity: return LaurentPoly(Var::A);
    case Perm3::swap_ab: body = (X(r.p()) - X(r.r())) * (X(r.a()) - X(r.b())); break;
    case Perm3::swap_bc: body = (X(r.p()) - X(r.q())) * (X(r.c()) - X(r.b())); break;
    case Perm3::swap_ac: body = (X(r.q()) - X(r.r())) * (X(r.a()) - X(r.c())); break;
    case Perm3::cycle_cab:
      body = det3({X(r.p()), X(r.q()), X(r.r())}, {X(r.c()), X(r.a()), X(r.b())});
      break;
    case Perm3::cycle_bca:
      body = -det3({X(r.p()), X(r.q()), X(r.r())}, {X(r.a()), X(r.b()), X(r.c())});
      break;
  }
  return (body * factor).shifted(-w);
}

}  // namespace

LaurentPoly nabla(Label p) {
  static std::mutex mu;
  static std::map<Label, LaurentPoly> memo{{1, Z(0)}, {2, Z(1)}};
  std::lock_guard lock(mu);
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  // Walk the recursion outward from the seeds in either direction.
  if (p > 2) {
    LaurentPoly a = memo.at(1), b = memo.at(2);
    for (Label k = 3; k <= p; ++k) {
      LaurentPoly c = Z(1) * b + a;
      a = std::move(b);
      b = std::move(c);
      memo.emplace(k, b);
    }
    return memo.at(p);
  }
  LaurentPoly hi = memo.at(2), lo = memo.at(1);
  for (Label k = 0; k >= p; --k) {
    // Nabla_k = Nabla_(k+2) - z Nabla_(k+1)
    LaurentPoly c = hi - Z(1) * lo;
    hi = std::move(lo);
    lo = std::move(c);
    memo.emplace(k, lo);
  }
  return memo.at(p);
}

LaurentPoly conway_single_twist(Label p, OrientationCase c) {
  if (c == OrientationCase::opposite_directions) {
    if (p % 2 != 0) throw usage_error("opposite directions need an even label");
    return Z(1, p / 2);
  }
  return nabla(p);
}

LaurentPoly conway_single_twist_chebyshev(Label p) {
  if (p <= 0) throw usage_error("Chebyshev form needs p > 0");
  const Label n = p - 1;
  LaurentPoly u = chebyshev_u(static_cast<int>(n));
  LaurentPoly out(Var::z);
  for (auto [k, ck] : u.terms()) {
    // i^n (-i/2)^k = (-1)^k (-1)^((n+k)/2) / 2^k since n+k is even.
    Label sign = ((k % 2) ? -1 : 1) * ((((n + k) / 2) % 2) ? -1 : 1);
    Label den = Label{1} << k;
    if (ck % den != 0) throw std::domain_error("Chebyshev coefficient not divisible");
    out += Z(k, sign * ck / den);
  }
  return out;
}

LaurentPoly conway_double_twist(Label p, Label q) {
  if (p % 2 == 0 && q % 2 == 0) return quarter_z2(p * q) + Z(0);
  if (q % 2 == 0) std::swap(p, q);
  if (p == 0) return Z(0);
  if (q > 0) {
    p = -p;
    q = -q;
  }
  return Z(1, (q - 1) / 2) * nabla(-p) + nabla(1 - p);
}

LaurentPoly conway_double_twist_printed(Label p, Label q) {
  if (q % 2 == 0 || p == 0) throw usage_error("printed odd-label formula needs q odd and p != 0");
  if (q < 0) return Z(1, (q - 1) / 2) * nabla(p) + nabla(p + 1);
  return nabla(p - 1) - Z(1, (q + 1) / 2) * nabla(p);
}

LaurentPoly conway_girth3_even(const Girth3Rep& r) {
  require_even_positive(r);
  const Label p = r.p(), q = r.q(), rr = r.r(), a = r.a(), b = r.b(), c = r.c();
  Label quartic = (p * q + p * rr + q * rr) * (a * b + a * c + b * c);
  Label quadratic = p * a + p * c + q * a + q * b + rr * b + rr * c;
  if (quartic % 16 != 0) throw std::domain_error("(z/2)^4 coefficient is not integral");
  return Z(4, quartic / 16) + quarter_z2(quadratic) + Z(0);
}

Girth3Rep apply_perm(const Girth3Rep& r, Perm3 p) {
  Girth3Rep o = r;
  const Label a = r.a(), b = r.b(), c = r.c();
  switch (p) {
    case Perm3::identity: break;
    case Perm3::swap_ab: o.bottom = {b, a, c}; break;
    case Perm3::swap_bc: o.bottom = {a, c, b}; break;
    case Perm3::swap_ac: o.bottom = {c, b, a}; break;
    case Perm3::cycle_cab: o.bottom = {c, a, b}; break;
    case Perm3::cycle_bca: o.bottom = {b, c, a}; break;
  }
  return o;
}

bool is_transposition(Perm3 p) {
  return p == Perm3::swap_ab || p == Perm3::swap_bc || p == Perm3::swap_ac;
}

Label int_det3(const std::array<Label, 3>& x, const std::array<Label, 3>& y) {
  return x[0] * (y[1] - y[2]) - x[1] * (y[0] - y[2]) + x[2] * (y[0] - y[1]);
}

LaurentPoly s_det3(const std::array<Label, 3>& x, const std::array<Label, 3>& y) {
  return det3({s_hat(x[0]), s_hat(x[1]), s_hat(x[2])}, {s_hat(y[0]), s_hat(y[1]), s_hat(y[2])});
}

LaurentPoly conway_diff(const Girth3Rep& r, Perm3 p) {
  require_even_positive(r);
  const Label pp = r.p(), q = r.q(), rr = r.r(), a = r.a(), b = r.b(), c = r.c();
  switch (p) {
    case Perm3::identity: return LaurentPoly(Var::z);
    case Perm3::swap_ab: return quarter_z2((pp - rr) * (a - b));
    case Perm3::swap_bc: return quarter_z2((pp - q) * (c - b));
    case Perm3::swap_ac: return quarter_z2((q - rr) * (a - c));
    case Perm3::cycle_cab: return quarter_z2(int_det3(r.top, {c, a, b}));
    case Perm3::cycle_bca: return quarter_z2(-int_det3(r.top, r.bottom));
  }
  throw usage_error("unknown permutation");
}

LaurentPoly s_poly(Label p) {
  if (p == 0) return LaurentPoly(Var::A);
  if (p < 0) return s_poly(-p).invert_variable();
  LaurentPoly s(Var::A);
  for (Label i = 1; i <= p; ++i) {
    Label k = p - i;  // (-A^3)^k
    s += A(2 - i + 3 * k, (k % 2) ? -1 : 1);
  }
  return s;
}

LaurentPoly s_hat(Label q) { return s_poly(q).shifted(q); }

LaurentPoly bracket_double_twist(Label p, Label q) {
  LaurentPoly sp = s_poly(p), sq = s_poly(q);
  return delta_poly() * (sp.shifted(-q) + sq.shifted(-p)) + sp * sq + A(-p - q);
}

LaurentPoly bracket_single_twist(Label p) { return bracket_double_twist(p - 1, -1); }

LaurentPoly sym_s(int k, const std::array<Label, 3>& t) {
  const Label p = t[0], q = t[1], r = t[2];
  const LaurentPoly sp = s_poly(p), sq = s_poly(q), sr = s_poly(r);
  switch (k) {
    case 0: return A(-p - q - r);
    case 1: return sp.shifted(-q - r) + sq.shifted(-p - r) + sr.shifted(-p - q);
    case 2: return (sp * sq).shifted(-r) + (sp * sr).shifted(-q) + (sq * sr).shifted(-p);
    case 3: return sp * sq * sr;
  }
  throw usage_error("sym_s index must be 0..3");
}

LaurentPoly bracket_girth3(const Girth3Rep& r) {
  const Label p = r.p(), q = r.q(), rr = r.r(), a = r.a(), b = r.b(), c = r.c();
  std::array<LaurentPoly, 4> T{sym_s(0, r.top), sym_s(1, r.top), sym_s(2, r.top), sym_s(3, r.top)};
  std::array<LaurentPoly, 4> U{sym_s(0, r.bottom), sym_s(1, r.bottom), sym_s(2, r.bottom),
                               sym_s(3, r.bottom)};
  auto SS = [](Label x, Label y, Label e) { return (s_poly(x) * s_poly(y)).shifted(e); };
  const LaurentPoly d = delta_poly();

  LaurentPoly g0 = T[0] * U[0] + T[2] * U[2] + SS(p, a, -q - rr - b - c) + SS(p, c, -q - rr - a - b) +
                   SS(q, a, -p - rr - b - c) + SS(q, b, -p - rr - a - c) + SS(rr, b, -p - q - a - c) +
                   SS(rr, c, -p - q - a - b);
  LaurentPoly g1 = T[1] * U[0] + T[0] * U[1] + T[2] * U[1] + T[1] * U[2] + T[3] * U[2] + T[2] * U[3];
  LaurentPoly g2 = T[2] * U[0] + T[0] * U[2] + T[3] * U[1] + T[1] * U[3] + T[3] * U[3] +
                   SS(p, b, -q - rr - a - c) + SS(q, c, -p - rr - a - b) + SS(rr, a, -p - q - b - c);
  LaurentPoly g3 = T[3] * U[0] + T[0] * U[3];
  return g0 + g1 * d + g2 * d.pow(2) + g3 * d.pow(3);
}

LaurentPoly bracket_closed(const Rep& r) {
  if (const auto* g1 = std::get_if<Girth1Rep>(&r)) return bracket_single_twist(g1->p);
  if (const auto* g2 = std::get_if<Girth2Rep>(&r)) return bracket_double_twist(g2->p, g2->q);
  return bracket_girth3(std::get<Girth3Rep>(r));
}

LaurentPoly bracket_diff(const Girth3Rep& r, Perm3 p) { return diff_core(r, p, one_minus_delta_sq()); }

LaurentPoly bracket_diff_printed_factor(const Girth3Rep& r, Perm3 p) {
  return diff_core(r, p, one_minus_printed_sq());
}

LaurentPoly bracket_diff_row_exchange_printed(const Girth3Rep& r) {
  const Label p = r.p(), q = r.q(), rr = r.r(), a = r.a(), b = r.b(), c = r.c();
  const LaurentPoly sp = s_poly(p), sq = s_poly(q), sr = s_poly(rr), sa = s_poly(a), sb = s_poly(b),
                    sc = s_poly(c);
  const LaurentPoly d = delta_poly();
  LaurentPoly first = (sp.shifted(-q - rr - a - b - c) - sa.shifted(-p - q - rr - b - c)) *
                      ((sb * sc).shifted(-p - q - rr - a) - (sq * sr).shifted(-p - a - b - c)) *
                      (d - d.pow(3));
  LaurentPoly second = (sq * sb * sc).shifted(-p - rr - a) + (sr * sb * sc).shifted(-p - q - a) +
                       sc.shifted(-p - q - rr - a - b) - (sq * sr * sb).shifted(-p - a - c) -
                       (sq * sr * sc).shifted(-p - a - b) - sq.shifted(-p - rr - a - b - c);
  return first + second * one_minus_delta_sq();
}

LaurentPoly row_exchange_cofactor(Label q, Label r, Label b, Label c) {
  const LaurentPoly sq = s_poly(q), sr = s_poly(r), sb = s_poly(b), sc = s_poly(c);
  const LaurentPoly d = delta_poly();
  return (sb * sc * sq).shifted(-r) + (sb * sc * sr).shifted(-q) + (d * sb * sc).shifted(-q - r) -
         (sb * sq * sr).shifted(-c) - (sc * sq * sr).shifted(-b) + sc.shifted(-b - q - r) -
         (d * sq * sr).shifted(-b - c) - sq.shifted(-b - c - r);
}

LaurentPoly bracket_diff_row_exchange(const Girth3Rep& r) {
  const Label p = r.p(), a = r.a();
  return one_minus_delta_sq() * (s_poly(p).shifted(-a) - s_poly(a).shifted(-p)) *
         row_exchange_cofactor(r.q(), r.r(), r.b(), r.c());
}

LaurentPoly row_exchange_lhs(Label q, Label r, Label b, Label c) {
  auto f = [](Label x) { return A(0) - A(4 * x); };
  return f(q) * f(b) * f(c) + f(r) * f(b) * f(c) - f(q) * f(r) * f(b) - f(q) * f(r) * f(c);
}

LaurentPoly row_exchange_rhs(Label q, Label r, Label b, Label c) {
  auto f = [](Label x) { return A(0) - A(4 * x); };
  LaurentPoly w = A(2) + A(-2);
  return w.pow(2) * (f(b) * f(c) - f(q) * f(r) + A(4 * c) - A(4 * q));
}

}  // namespace knottab
