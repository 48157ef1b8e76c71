#pragma once

#include <string>
#include <vector>

#include "lieqr/flows.hpp"

namespace lieqr {

struct FormulaCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Compare the engine's symbolic expansions against the displayed one- and
/// two-step formulas, coefficient by coefficient, for every applicable
/// index choice:
///   single E/F flows on H_1, single flows of iterated brackets,
///   the E_i/F_i pair, the mixed E_i/F_j pair and the E_i/E_j pair.
std::vector<FormulaCheck> check_flow_formulas(const LieAlgebra& L);

/// The three-step word beta_w(E_i) beta_s(E_j) beta_t(F_j) (H_1) for
/// a_{1i} = 0, a_{1j} != 0, a_{ji} != 0. The displayed formula and the
/// composed expansion disagree on the s^2 t group coefficient; the engine
/// is the arbiter and the discrepancy is reported, not corrected.
struct TripleWordReport {
  int i = 0, j = 0;
  bool rest_matches = false;  // every coefficient outside the known spot agrees
  Rat engine_inner_s2t;       // engine: a_{1j}
  Rat displayed_inner_s2t;        // displayed: a_{1j}^2 / 2
  std::string summary;
  bool discrepancy_present() const { return engine_inner_s2t != displayed_inner_s2t; }
};

std::vector<TripleWordReport> check_triple_word(const LieAlgebra& L);

}  // namespace lieqr
