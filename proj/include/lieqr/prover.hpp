#pragma once

#include <string>
#include <vector>

#include "lieqr/flows.hpp"
#include "lieqr/linalg.hpp"

namespace lieqr {

/// One extracted linear constraint on the unknowns c_{(X,Y)}, X <= Y in
/// basis order: the coefficient of `monomial` in the expanded quadratic
/// identity along `word`, normalized so the first nonzero entry is +1.
struct TraceConstraint {
  std::string word;
  std::string monomial;
  std::vector<std::pair<int, Rat>> combo;  // pair-column -> coefficient
  bool fresh = false;                      // grew the system's rank
};

/// The displayed intermediate identities, matched verbatim against the
/// constraints the engine extracted from the (h)-words.
struct NamedIdentity {
  std::string name;
  std::string word;
  std::string monomial;
  bool matched = false;
};

struct ProverConfig {
  int rank_cap = 4;  // symbolic schedule permitted up to this Lie rank
  uint64_t seed = 1;
  bool allow_extension = true;  // top up with random symbolic words
  int max_extension_words = 300;
  bool keep_trace = true;
};

struct ProverReport {
  int dim = 0;
  int unknowns = 0;
  int words = 0;
  int extension_words = 0;
  int constraints = 0;  // deduplicated monomial constraints
  int rank = 0;
  int nullspace_dim = 0;
  uint64_t prime = 0;  // rank bookkeeping runs mod a seeded prime
  std::vector<NamedIdentity> named;
  std::vector<TraceConstraint> trace;
  bool closed() const { return nullspace_dim == 0; }
};

/// Mechanizes the coefficient-extraction proof: expands the scheduled flow
/// words symbolically, turns every monomial coefficient of
/// sum c_{(X,Y)} f_X f_Y into a linear constraint, and reports the
/// nullspace dimension of the system (0 closes the proof: the pairwise
/// products admit no linear relation).
///
/// Full rank mod the seeded prime already certifies full rank over Q; the
/// exact fallback runs only when the schedule does not close.
ProverReport coefficient_prover(const LieAlgebra& L, const ProverConfig& cfg = {});

std::string render_trace(const LieAlgebra& L, const ProverReport& rep);

}  // namespace lieqr
