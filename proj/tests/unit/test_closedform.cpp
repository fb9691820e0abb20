#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "knottab/closedform.hpp"
#include "knottab/oracle.hpp"

using namespace knottab;
using namespace knottab::test;

TEST_CASE("single twist Conway") {
  CHECK(conway_single_twist(1, OrientationCase::same_direction) == Z(0));
  CHECK(conway_single_twist(4, OrientationCase::opposite_directions) == Z(1, 2));
  CHECK(conway_single_twist(3, OrientationCase::same_direction) == z_poly("z^2 + 1"));
  for (Label p = 1; p <= 9; ++p) CHECK(conway_single_twist_chebyshev(p) == nabla(p));
}

TEST_CASE("double twist Conway") {
  CHECK(conway_double_twist(2, 2) == z_poly("z^2 + 1"));
  CHECK(conway_double_twist(2, -2) == z_poly("1 - z^2"));
  CHECK(conway_double_twist(2, -3) == conway_fox(pd_from_rep(Girth2Rep{2, -3})));
}

TEST_CASE("printed odd-label formula is shifted") {
  // The literal q > 0 branch equals the calibrated value at q + 2.
  for (Label p = -4; p <= 4; ++p) {
    if (p == 0) continue;
    for (Label q = 1; q <= 5; q += 2) CHECK(conway_double_twist_printed(p, q) == conway_double_twist(p, q + 2));
  }
  CHECK(conway_double_twist_printed(2, 3) != conway_fox(pd_from_rep(Girth2Rep{2, 3})));
}

TEST_CASE("girth-3 even Conway") {
  CHECK(conway_girth3_even(Girth3Rep{{2, 2, 2}, {2, 2, 2}}) == z_poly("9z^4 + 6z^2 + 1"));
  // Zero integer determinant: the Conway polynomial cannot separate these.
  CHECK(conway_girth3_even(Girth3Rep{{4, 8, 12}, {4, 6, 2}}) == conway_girth3_even(Girth3Rep{{4, 8, 12}, {2, 4, 6}}));
  // The next 3-cycle step has determinant 24, i.e. a 6z^2 difference.
  CHECK(conway_girth3_even(Girth3Rep{{4, 8, 12}, {2, 4, 6}}) - conway_girth3_even(Girth3Rep{{4, 8, 12}, {6, 2, 4}}) ==
        Z(2, 6));
  CHECK_THROWS_AS(conway_girth3_even(Girth3Rep{{2, 2, 2}, {2, 2, 3}}), usage_error);
}

TEST_CASE("Conway differences") {
  const Girth3Rep r{{2, 4, 6}, {2, 4, 6}};
  CHECK(conway_diff(r, Perm3::swap_ab) == Z(2, 2));
  CHECK(conway_diff(r, Perm3::identity).is_zero());
  const Girth3Rep flat{{4, 4, 4}, {2, 6, 8}};
  for (Perm3 p : {Perm3::swap_ab, Perm3::swap_bc, Perm3::swap_ac}) {
    CHECK(conway_diff(flat, p).is_zero());
    CHECK(conway_girth3_even(flat) == conway_girth3_even(apply_perm(flat, p)));
  }
}

TEST_CASE("S polynomials") {
  CHECK(s_poly(1) == A(1));
  CHECK(s_poly(2) == A(0) - A(4));
  CHECK(s_poly(0).is_zero());
  CHECK(s_hat(2) * (A(2) + A(-2)) == A(0) - A(8));
  for (Label q = -10; q <= 10; q += 2) CHECK(s_hat(q) * (A(2) + A(-2)) == A(0) - A(4 * q));
  for (Label p = 1; p <= 10; ++p) CHECK(s_poly(-p) == s_poly(p).invert_variable());
}

TEST_CASE("odd S-hat identity carries a sign") {
  for (Label q = -9; q <= 9; q += 2) {
    CHECK(s_hat(q) * (A(2) + A(-2)) == A(0) + A(4 * q));
    CHECK(s_hat(q) * (A(2) + A(-2)) != A(0) - A(4 * q));
  }
}

TEST_CASE("double twist bracket") {
  CHECK(bracket_double_twist(1, 1) == delta_poly());
  CHECK(bracket_double_twist(0, 0) == A(0));
  for (Label p = 2; p <= 7; ++p)
    for (Label q = 2; q <= 7; ++q) {
      const auto b = bracket_double_twist(p, q);
      const auto e = b.extremes();
      CHECK(e.min_exp == -(p + q));
      CHECK(b.coeff(e.min_exp) == -1);
      CHECK(e.max_exp == 3 * (p + q) - 4);
      CHECK(b.coeff(e.max_exp) == ((p + q) % 2 ? -1 : 1));
    }
}

TEST_CASE("symmetric S sums") {
  CHECK(sym_s(0, {0, 0, 0}) == A(0));
  CHECK(sym_s(3, {1, 1, 1}) == A(3));
  const auto s = sym_s(1, {2, 4, 6});
  for (auto t : {std::array<Label, 3>{4, 2, 6}, {6, 4, 2}, {2, 6, 4}, {4, 6, 2}, {6, 2, 4}}) CHECK(sym_s(1, t) == s);
}

TEST_CASE("girth-3 bracket") {
  const Girth3Rep r{{2, 4, 6}, {2, 4, 6}};
  for (const auto& s : d3_orbit(r)) CHECK(bracket_girth3(s) == bracket_girth3(r));
  const Girth3Rep fig{{0, 2, 2}, {0, -1, -1}};
  CHECK(bracket_girth3(fig) == bracket_oracle(pd_from_rep(fig)));
}

TEST_CASE("bracket differences") {
  const Girth3Rep r{{4, 8, 12}, {4, 6, 2}};
  CHECK(bracket_diff(r, Perm3::identity).is_zero());
  const auto w = A(2) + A(-2);
  CHECK(RationalLaurent(s_det3({4, 8, 12}, {2, 4, 6}), A(0)) ==
        RationalLaurent(A(32) - A(40, 2) + A(56, 2) - A(64), w * w));
  const Girth3Rep flat{{6, 6, 6}, {4, 4, 4}};
  for (Perm3 p : {Perm3::swap_ab, Perm3::swap_bc, Perm3::swap_ac, Perm3::cycle_cab, Perm3::cycle_bca})
    CHECK(bracket_diff(flat, p).is_zero());
}

TEST_CASE("printed variants disagree with direct subtraction") {
  const Girth3Rep r{{2, 4, 6}, {4, 6, 8}};
  const auto direct = bracket_girth3(r) - bracket_girth3(apply_perm(r, Perm3::swap_ab));
  CHECK(bracket_diff(r, Perm3::swap_ab) == direct);
  CHECK(bracket_diff_printed_factor(r, Perm3::swap_ab) != direct);
  const Girth3Rep x{{4, 4, 6}, {2, 6, 8}};
  const auto dx = bracket_girth3(x) - bracket_girth3(Girth3Rep{{2, 4, 6}, {4, 6, 8}});
  CHECK(bracket_diff_row_exchange(x) == dx);
  CHECK(bracket_diff_row_exchange_printed(x) != dx);
}

TEST_CASE("row exchange cofactor vanishes when q = c = 0 or q = c, b = r") {
  CHECK(row_exchange_cofactor(0, 4, 6, 0).is_zero());
  CHECK(row_exchange_cofactor(4, 6, 6, 4).is_zero());
  CHECK(!row_exchange_cofactor(2, 4, 6, 8).is_zero());
}

TEST_CASE("integer determinant") {
  CHECK(int_det3({4, 8, 12}, {2, 4, 6}) == 0);
  CHECK(int_det3({2, 4, 6}, {2, 4, 8}) != 0);
}
