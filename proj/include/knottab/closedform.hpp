#pragma once

#include <array>

#include "knottab/laurent.hpp"
#include "knottab/repr.hpp"

namespace knottab {

enum class OrientationCase { same_direction, opposite_directions };

// Nabla_p from the skein recursion, extended to every integer p.
LaurentPoly nabla(Label p);

LaurentPoly conway_single_twist(Label p, OrientationCase c);
// Chebyshev form i^(p-1) U_(p-1)(-zi/2) expanded exactly; p > 0.
LaurentPoly conway_single_twist_chebyshev(Label p);

// Oracle-calibrated: pq/4 z^2 + 1 for even/even, otherwise the odd-label
// formula with q<0 reduced through K(p,q) ~ K(-p,-q). Swaps labels when
// only p is odd. Two-component cases get the formula's value unverified.
LaurentPoly conway_double_twist(Label p, Label q);
// The odd-label branch formula exactly as printed; q odd, p != 0.
LaurentPoly conway_double_twist_printed(Label p, Label q);

// Precondition: all labels even and positive.
LaurentPoly conway_girth3_even(const Girth3Rep& r);

// Permutations of the bottom row used by the difference identities.
enum class Perm3 { identity, swap_ab, swap_bc, swap_ac, cycle_cab, cycle_bca };
Girth3Rep apply_perm(const Girth3Rep& r, Perm3 p);
bool is_transposition(Perm3 p);

// Closed product/determinant forms; compare against direct subtraction.
LaurentPoly conway_diff(const Girth3Rep& r, Perm3 p);

LaurentPoly s_poly(Label p);
LaurentPoly s_hat(Label q);  // S_q A^q
LaurentPoly bracket_double_twist(Label p, Label q);
// K(p) drawn as a cycle: equals K(p-1,-1).
LaurentPoly bracket_single_twist(Label p);

LaurentPoly sym_s(int k, const std::array<Label, 3>& t);
LaurentPoly bracket_girth3(const Girth3Rep& r);
LaurentPoly bracket_closed(const Rep& r);

// Difference forms with factor (1 - delta^2). The printed variant uses
// (1 - (-A^2 - A^-1)^2) and is kept only to document that it fails.
LaurentPoly bracket_diff(const Girth3Rep& r, Perm3 p);
LaurentPoly bracket_diff_printed_factor(const Girth3Rep& r, Perm3 p);
// <K(p q r/a b c)> - <K(a q r/p b c)>
//   = (1 - delta^2) (S_p A^-a - S_a A^-p) * row_exchange_cofactor(q, r, b, c).
LaurentPoly bracket_diff_row_exchange(const Girth3Rep& r);
LaurentPoly row_exchange_cofactor(Label q, Label r, Label b, Label c);
// The expanded three-term display as printed; it disagrees with direct
// subtraction and is kept to document that.
LaurentPoly bracket_diff_row_exchange_printed(const Girth3Rep& r);

// 3x3 integer determinant with rows (top), (perm row), (1,1,1).
Label int_det3(const std::array<Label, 3>& r1, const std::array<Label, 3>& r2);
// Same with S_x A^x entries.
LaurentPoly s_det3(const std::array<Label, 3>& r1, const std::array<Label, 3>& r2);

// Both sides of the cleared-denominator identity used for the row exchange.
LaurentPoly row_exchange_lhs(Label q, Label r, Label b, Label c);
LaurentPoly row_exchange_rhs(Label q, Label r, Label b, Label c);

}  // namespace knottab
