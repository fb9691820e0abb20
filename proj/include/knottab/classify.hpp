#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "knottab/closedform.hpp"
#include "knottab/laurent.hpp"
#include "knottab/repr.hpp"

namespace knottab {

enum class Method { closed, oracle };

// Invariants of a representation. The Conway polynomial is only filled in
// for knots.
struct RepInvariants {
  int components = 1;
  int writhe = 0;
  std::optional<LaurentPoly> conway;
  LaurentPoly bracket{Var::A};
  LaurentPoly jones{Var::t4};
  std::int64_t span = 0;
  std::string source;  // "closed_form" or "oracle"
};

// Closed forms where they exist; the oracle otherwise, refusing diagrams
// above budget_crossings.
RepInvariants rep_invariants(const Rep& r, Method m = Method::closed, int budget_crossings = 24);

enum class VerdictTag { EqualBySymmetry, DistinctByConway, DistinctByJones, NecessaryConditionFails, Unresolved };

std::string to_string(VerdictTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::Unresolved;
  std::optional<LaurentPoly> evidence;  // nonzero for every Distinct verdict
  std::string witness;                  // symmetry word or note
};

nlohmann::json to_json(const Verdict& v);

// Word in the generators rot/refl/swap taking from to to, if any.
std::optional<std::string> d3_word(const Girth3Rep& from, const Girth3Rep& to);

Verdict classify_girth2_even(Label p, Label q, Label a, Label b);
// Compares r with apply_perm(r, tau).
Verdict transposition_test(const Girth3Rep& r, Perm3 tau);
Verdict cycle_obstruction(const Girth3Rep& r, Perm3 cycle);
// Compares r with K(a q r / p b c).
Verdict row_swap_test(const Girth3Rep& r);

Verdict compare(const Rep& r1, const Rep& r2, bool mirror_ok = false, int budget_crossings = 24);

}  // namespace knottab
