#pragma once

#include <array>
#include <vector>

#include "knottab/diagram.hpp"
#include "knottab/laurent.hpp"

namespace knottab {

inline constexpr int kStateSumCap = 24;

struct BracketState {
  std::vector<bool> a_smoothing;  // per crossing
  int loops = 0;
};

// Loop count of one smoothing state, free loops included.
int count_loops(const PDCode& pd, const std::vector<bool>& a_smoothing);

// Plain 2^n state sum, <O> = 1. jobs > 1 splits the state range.
LaurentPoly bracket_state_sum(const PDCode& pd, int jobs = 1);
// Same bracket by a frontier contraction over crossings; no size cap.
LaurentPoly bracket_contraction(const PDCode& pd);
// State sum up to 16 crossings, contraction above.
LaurentPoly bracket_oracle(const PDCode& pd);

// Orientation of every strand. in[c][k] is true when the strand enters
// crossing c through arm k.
struct Orientation {
  std::vector<std::array<bool, 4>> in;
  std::vector<int> sign;
  int components = 0;
};

Orientation orient(const PDCode& pd);
int writhe(const PDCode& pd);
int components(const PDCode& pd);

LaurentPoly jones_oracle(const PDCode& pd);

// Symmetric Alexander polynomial in t (Var::x), Delta(1) = 1. Knots only.
LaurentPoly alexander_fox(const PDCode& pd, int max_crossings = kStateSumCap);
LaurentPoly conway_from_alexander(const LaurentPoly& alex);
LaurentPoly conway_fox(const PDCode& pd, int max_crossings = kStateSumCap);

}  // namespace knottab
