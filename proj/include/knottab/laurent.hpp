#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knottab {

// Semantic tag of the formal variable. T4 stands for t^(1/4): a Jones
// polynomial stores the exponent of t multiplied by 4.
enum class Var { A, z, t4, x };

char var_symbol(Var v);

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

struct Extremes {
  std::int64_t min_exp;
  std::int64_t max_exp;
  std::int64_t span;
};

class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;

  explicit LaurentPoly(Var v = Var::A) : var_(v) {}
  LaurentPoly(Var v, Terms terms);

  static LaurentPoly monomial(Var v, std::int64_t exp, std::int64_t coef = 1);
  static LaurentPoly constant(Var v, std::int64_t c) { return monomial(v, 0, c); }

  Var var() const noexcept { return var_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(std::int64_t exp) const;
  std::size_t size() const noexcept { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  LaurentPoly scaled(std::int64_t k) const;
  // Multiply by var^k.
  LaurentPoly shifted(std::int64_t k) const;
  LaurentPoly pow(unsigned n) const;
  // x -> x^-1.
  LaurentPoly invert_variable() const;
  // x -> x^k for an integer k != 0.
  LaurentPoly substitute_power(std::int64_t k) const;
  LaurentPoly with_var(Var v) const;

  Extremes extremes() const;
  std::int64_t derivative_at_one() const;
  std::int64_t eval_at_one() const;

  std::string str() const;

 private:
  void add_term(std::int64_t exp, std::int64_t coef);

  Var var_;
  Terms terms_;
};

// Exact quotient; throws std::domain_error when d does not divide n.
LaurentPoly divide_exact(const LaurentPoly& n, const LaurentPoly& d);

// Binary ops dispatch used by the CLI and bindings.
enum class ArithOp { add, sub, mul, neg, scale };
LaurentPoly lp_arith(ArithOp op, const LaurentPoly& x, const LaurentPoly* y = nullptr,
                     std::int64_t k = 1);

LaurentPoly parse_laurent(std::string_view text);

class RationalLaurent {
 public:
  RationalLaurent(LaurentPoly num, LaurentPoly den);
  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  friend bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  bool is_zero() const { return num_.is_zero(); }
  std::string str() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// U_n in the variable x (Var::x).
LaurentPoly chebyshev_u(int n);
// Explicit binomial-sum form of U_n, used to cross-check the recursion.
LaurentPoly chebyshev_u_explicit(int n);

// (-A^3)^(-w) * bracket with A^4 = t, stored in t^(1/4) units.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, std::int64_t writhe);
// Inclusive span in powers of t: (max - min)/4 + 1.
std::int64_t jones_span(const LaurentPoly& jones);

LaurentPoly delta_poly();  // -A^2 - A^-2

}  // namespace knottab
