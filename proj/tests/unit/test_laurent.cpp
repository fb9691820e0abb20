#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "knottab/laurent.hpp"

using namespace knottab;
using knottab::test::A;

TEST_CASE("arithmetic") {
  const LaurentPoly neg = -A(-1), other = A(3) + A(-7), zero(Var::A);
  CHECK(lp_arith(ArithOp::add, A(1) + A(-1), &neg) == A(1));
  CHECK(lp_arith(ArithOp::mul, zero, &other).is_zero());
  CHECK((A(0) - A(4)) * (A(0) + A(4)) == A(0) - A(8));
  CHECK(zero.terms().empty());
  CHECK((A(2) - A(2)).terms().empty());
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(-6, 6), c(-3, 3);
  auto rnd = [&] {
    LaurentPoly p(Var::A);
    for (int i = 0; i < 4; ++i) p += A(e(rng), c(rng));
    return p;
  };
  for (int i = 0; i < 200; ++i) {
    const auto x = rnd(), y = rnd(), w = rnd();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    const auto xy = x * y;
    for (const auto& [k, v] : xy.terms()) CHECK(v != 0);
  }
}

TEST_CASE("invert variable") {
  CHECK(A(1).invert_variable() == A(-1));
  CHECK((A(0) - A(4)).invert_variable() == A(0) - A(-4));
  const auto p = A(3, 2) - A(-5) + A(0, 7);
  CHECK(p.invert_variable().invert_variable() == p);
}

TEST_CASE("extremes") {
  const auto e = (A(8) - A(-4)).extremes();
  CHECK(e.min_exp == -4);
  CHECK(e.max_exp == 8);
  CHECK(e.span == 12);
  const auto c = LaurentPoly::constant(Var::A, 3).extremes();
  CHECK(c.min_exp == 0);
  CHECK(c.max_exp == 0);
  CHECK(c.span == 0);
}

TEST_CASE("derivative at one") {
  CHECK(A(4).derivative_at_one() == 4);
  CHECK((A(0) - A(8)).derivative_at_one() == -8);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"1 - A^4", "-A^-10 + A^-6 - A^-2 + A^2", "3A^-1 + 2", "0"}) {
    const auto p = parse_laurent(s);
    CHECK(parse_laurent(p.str()) == p);
  }
  CHECK(parse_laurent("-A^-2 - A^2") == delta_poly());
  CHECK_THROWS_AS(parse_laurent("A^"), parse_error);
  CHECK_THROWS_AS(parse_laurent("A + z"), parse_error);
}

TEST_CASE("exact division") {
  const auto n = (A(0) - A(4)) * (A(2) + A(-2));
  CHECK(divide_exact(n, A(2) + A(-2)) == A(0) - A(4));
  CHECK_THROWS_AS(divide_exact(A(0) + A(1), A(0) + A(2)), std::domain_error);
}

TEST_CASE("rational equality cross-multiplies") {
  const RationalLaurent x(A(2) - A(6), A(0)), y((A(2) - A(6)) * (A(1) + A(3)), A(1) + A(3));
  CHECK(x == y);
  CHECK_THROWS(RationalLaurent(A(0), LaurentPoly(Var::A)));
}

TEST_CASE("chebyshev") {
  const auto x = LaurentPoly::monomial(Var::x, 1);
  CHECK(chebyshev_u(0) == LaurentPoly::constant(Var::x, 1));
  CHECK(chebyshev_u(1) == x.scaled(2));
  CHECK(chebyshev_u(2) == x * x.scaled(4) - LaurentPoly::constant(Var::x, 1));
  for (int n = 0; n <= 12; ++n) CHECK(chebyshev_u(n) == chebyshev_u_explicit(n));
}

TEST_CASE("jones from bracket") {
  // t^(1/2) is exponent 2 in quarter units.
  const auto j = jones_from_bracket(delta_poly(), 0);
  CHECK(j == -LaurentPoly::monomial(Var::t4, 2) - LaurentPoly::monomial(Var::t4, -2));
  CHECK(jones_span(j) == 2);
}
