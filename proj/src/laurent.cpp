#include "knottab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace knottab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

void require_same_var(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var() != b.var()) throw usage_error("variable tag mismatch in Laurent arithmetic");
}

std::string exponent_text(Var v, std::int64_t e) {
  if (v != Var::t4) return std::to_string(e);
  if (e % 4 == 0) return std::to_string(e / 4);
  std::int64_t g = std::gcd(e < 0 ? -e : e, std::int64_t{4});
  return "(" + std::to_string(e / g) + "/" + std::to_string(4 / g) + ")";
}

}  // namespace

char var_symbol(Var v) {
  switch (v) {
    case Var::A: return 'A';
    case Var::z: return 'z';
    case Var::t4: return 't';
    case Var::x: return 'x';
  }
  return '?';
}

LaurentPoly::LaurentPoly(Var v, Terms terms) : var_(v) {
  for (auto [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Var v, std::int64_t exp, std::int64_t coef) {
  LaurentPoly p(v);
  p.add_term(exp, coef);
  return p;
}

void LaurentPoly::add_term(std::int64_t exp, std::int64_t coef) {
  if (coef == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coef);
    return;
  }
  it->second = checked_add(it->second, coef);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t LaurentPoly::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_var(*this, o);
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_var(*this, o);
  for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_var(a, b);
  LaurentPoly r(a.var_);
  for (auto [e1, c1] : a.terms_)
    for (auto [e2, c2] : b.terms_) r.add_term(checked_add(e1, e2), checked_mul(c1, c2));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(std::int64_t k) const {
  LaurentPoly r(var_);
  for (auto [e, c] : terms_) r.add_term(e, checked_mul(c, k));
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r(var_);
  for (auto [e, c] : terms_) r.terms_.emplace(checked_add(e, k), c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = constant(var_, 1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(std::int64_t k) const {
  if (k == 0) throw usage_error("substitute_power needs a nonzero power");
  LaurentPoly r(var_);
  for (auto [e, c] : terms_) r.terms_.emplace(checked_mul(e, k), c);
  return r;
}

LaurentPoly LaurentPoly::with_var(Var v) const {
  LaurentPoly r = *this;
  r.var_ = v;
  return r;
}

Extremes LaurentPoly::extremes() const {
  if (terms_.empty()) throw std::domain_error("span of the zero polynomial is undefined");
  std::int64_t lo = terms_.begin()->first, hi = terms_.rbegin()->first;
  return {lo, hi, hi - lo};
}

std::int64_t LaurentPoly::derivative_at_one() const {
  std::int64_t s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, checked_mul(e, c));
  return s;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto [e, c] : terms_) s = checked_add(s, c);
  return s;
}

// Conway polynomials read naturally in descending order ("z^2 + 1"); all
// other variables render ascending ("-A^-4 + 2 + A^8").
std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::int64_t, std::int64_t>> order(terms_.begin(), terms_.end());
  if (var_ == Var::z) std::reverse(order.begin(), order.end());
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : order) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var_symbol(var_);
    if (!(var_ != Var::t4 && e == 1) && !(var_ == Var::t4 && e == 4)) os << '^' << exponent_text(var_, e);
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& n, const LaurentPoly& d) {
  require_same_var(n, d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly q(n.var()), r = n;
  auto [dlo, dhi, dspan] = d.extremes();
  std::int64_t lead = d.coeff(dhi);
  while (!r.is_zero()) {
    auto [rlo, rhi, rspan] = r.extremes();
    if (rspan < dspan) throw std::domain_error("inexact Laurent division");
    std::int64_t c = r.coeff(rhi);
    if (c % lead != 0) throw std::domain_error("inexact Laurent division");
    LaurentPoly t = LaurentPoly::monomial(n.var(), rhi - dhi, c / lead);
    q += t;
    r -= t * d;
  }
  return q;
}

LaurentPoly lp_arith(ArithOp op, const LaurentPoly& x, const LaurentPoly* y, std::int64_t k) {
  auto need = [&] {
    if (!y) throw usage_error("binary Laurent operation needs two operands");
    return *y;
  };
  switch (op) {
    case ArithOp::add: return x + need();
    case ArithOp::sub: return x - need();
    case ArithOp::mul: return x * need();
    case ArithOp::neg: return -x;
    case ArithOp::scale: return x.scaled(k);
  }
  throw usage_error("unknown Laurent operation");
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip();
    if (eat('0')) {
      skip();
      if (at_end()) return LaurentPoly(Var::A);
    }
    pos_ = 0;
    skip();
    std::vector<std::tuple<std::int64_t, std::int64_t>> terms;
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (eat('+')) {
        if (first) fail("leading '+'");
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip();
      auto [e, c] = term();
      terms.emplace_back(e, sign * c);
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    LaurentPoly p(var_.value_or(Var::A));
    for (auto [e, c] : terms) p += LaurentPoly::monomial(p.var(), e, c);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (!at_end() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  std::int64_t integer(bool allow_sign) {
    std::int64_t sign = 1;
    if (allow_sign && eat('-')) sign = -1;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected digits");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    return sign * v;
  }

  std::pair<std::int64_t, std::int64_t> term() {
    std::int64_t c = 1;
    bool have_coef = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      c = integer(false);
      have_coef = true;
      skip();
      eat('*');
      skip();
    }
    if (at_end() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      if (!have_coef) fail("expected a term");
      return {0, c};
    }
    Var v;
    switch (s_[pos_]) {
      case 'A': v = Var::A; break;
      case 'z': v = Var::z; break;
      case 't': v = Var::t4; break;
      case 'x': v = Var::x; break;
      default: fail("unknown variable");
    }
    if (var_ && *var_ != v) fail("mixed variables");
    var_ = v;
    ++pos_;
    std::int64_t e = 1;
    if (eat('^')) {
      if (eat('(')) {
        std::int64_t num = integer(true);
        std::int64_t den = 1;
        if (eat('/')) den = integer(false);
        if (!eat(')')) fail("expected ')'");
        if (v != Var::t4 && den != 1) fail("fractional exponent needs variable t");
        if (v == Var::t4) {
          if ((num * 4) % den != 0) fail("exponent is not a multiple of 1/4");
          e = num * 4 / den;
        } else {
          e = num;
        }
        return {e, c};
      }
      e = integer(true);
    }
    if (v == Var::t4) e *= 4;
    return {e, c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<Var> var_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return PolyParser(text).parse(); }

RationalLaurent::RationalLaurent(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  require_same_var(num_, den_);
}

std::string RationalLaurent::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

LaurentPoly chebyshev_u(int n) {
  if (n < 0) throw usage_error("chebyshev_u needs n >= 0");
  LaurentPoly prev = LaurentPoly::constant(Var::x, 1);
  if (n == 0) return prev;
  LaurentPoly two_x = LaurentPoly::monomial(Var::x, 1, 2);
  LaurentPoly cur = two_x;
  for (int k = 1; k < n; ++k) {
    LaurentPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly chebyshev_u_explicit(int n) {
  if (n < 0) throw usage_error("chebyshev_u needs n >= 0");
  auto binom = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  LaurentPoly x2m1 = LaurentPoly::monomial(Var::x, 2) - LaurentPoly::constant(Var::x, 1);
  LaurentPoly sum(Var::x);
  for (int m = 0; m <= n / 2; ++m)
    sum += LaurentPoly::monomial(Var::x, n - 2 * m, binom(n + 1, 2 * m + 1)) * x2m1.pow(m);
  return sum;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, std::int64_t writhe) {
  if (bracket.is_zero()) throw std::domain_error("zero bracket");
  if (bracket.var() != Var::A) throw usage_error("bracket must be a polynomial in A");
  LaurentPoly r = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) r = -r;
  return r.with_var(Var::t4);
}

std::int64_t jones_span(const LaurentPoly& jones) {
  auto ex = jones.extremes();
  if (ex.span % 4 != 0) throw std::domain_error("Jones exponents are not congruent mod 1");
  return ex.span / 4 + 1;
}

LaurentPoly delta_poly() {
  return LaurentPoly::monomial(Var::A, 2, -1) + LaurentPoly::monomial(Var::A, -2, -1);
}

}  // namespace knottab
