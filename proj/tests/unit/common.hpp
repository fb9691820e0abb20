#pragma once

#include <string>

#include "knottab/diagram.hpp"
#include "knottab/laurent.hpp"

#ifndef KNOTTAB_DATA_DIR
#define KNOTTAB_DATA_DIR "fixtures"
#endif

namespace knottab::test {

inline LaurentPoly A(std::int64_t e, std::int64_t c = 1) { return LaurentPoly::monomial(Var::A, e, c); }
inline LaurentPoly Z(std::int64_t e, std::int64_t c = 1) { return LaurentPoly::monomial(Var::z, e, c); }
inline LaurentPoly z_poly(const char* s) { return parse_laurent(s).with_var(Var::z); }

inline std::string fixture(const std::string& rel) { return std::string(KNOTTAB_DATA_DIR) + "/" + rel; }

// Equal after multiplying y by some +-A^k.
inline bool unit_equal(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return x == y;
  LaurentPoly ys = y.shifted(x.extremes().min_exp - y.extremes().min_exp);
  return ys == x || -ys == x;
}

inline bool equal_up_to_mirror(const LaurentPoly& x, const LaurentPoly& y) {
  return x == y || x == y.invert_variable();
}

}  // namespace knottab::test
