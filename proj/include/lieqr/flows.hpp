#pragma once

#include <string>
#include <vector>

#include "lieqr/algebra.hpp"
#include "lieqr/rng.hpp"

namespace lieqr {

/// One step of a flow word: a one-parameter automorphism of the algebra.
/// Nilpotent steps are exp(t ad_{E/F}) with an additive parameter;
/// toral steps act diagonally with a multiplicative parameter u != 0.
struct FlowStep {
  enum class Kind { Nilpotent, Toral };
  Kind kind;
  int basis;     // E/F basis index (nilpotent) or H basis index (toral)
  bool symbolic;
  Rat value;           // when !symbolic
  std::string symbol;  // when symbolic
};

FlowStep nil_step(int basis, const Rat& t);
FlowStep nil_step(int basis, const std::string& symbol);
FlowStep toral_step(int h_basis, const Rat& u);  // throws on u == 0
FlowStep toral_step(int h_basis, const std::string& symbol);

/// A group element as a product of one-parameter flows. Evaluation is
/// right to left: the last step acts first on the target.
struct FlowWord {
  std::vector<FlowStep> steps;

  bool has_symbols() const;
  /// The exact inverse: steps reversed, nilpotent parameters negated,
  /// toral parameters inverted. Rational words only.
  FlowWord inverse() const;
  FlowWord& append(const FlowWord& tail);
};

inline Rat rat_pow(Rat u, int e) {
  if (e < 0) {
    u = 1 / u;
    e = -e;
  }
  Rat acc(1);
  for (int k = 0; k < e; ++k) acc *= u;
  return acc;
}

inline Rat scalar_one_like(const Rat&) { return Rat(1); }

/// exp(t ad_x)(target) for x = scale * basis generator (ad nilpotent).
/// Throws when the generator is a Cartan element.
template <class S>
Elem<S> nilpotent_flow_apply(const LieAlgebra& L, int gen, const S& t, Elem<S> target,
                             int scale = 1) {
  if (L.is_cartan(gen)) {
    throw std::invalid_argument("nilpotent_flow: " + L.label(gen) +
                                " is toral; use toral_flow instead");
  }
  Elem<S> cur = target;
  Rat inv_fact(1);
  long sc = 1;
  for (int k = 1; k <= L.dim() + 1; ++k) {
    cur = bracket_basis(L, gen, cur);
    if (elem_is_zero(cur)) return target;
    inv_fact /= k;
    sc *= scale;
    // target += t^k * scale^k / k! * cur
    for (int i = 0; i < L.dim(); ++i) {
      if (scalar_is_zero(cur[i])) continue;
      S term = cur[i];
      for (int m = 0; m < k; ++m) term = term * t;
      target[i] += scalar_scaled(term, sc) * inv_fact;
    }
  }
  throw std::logic_error("nilpotent_flow: ad chain did not terminate");
}

/// Diagonal torus action: E_a -> u^{<a,H_i>} E_a, F_a -> u^{-<a,H_i>} F_a,
/// H fixed. Exact for rational u != 0.
Elem<Rat> toral_flow_apply(const LieAlgebra& L, int h_basis, const Rat& u, Elem<Rat> target);

/// Same with a Laurent variable as the parameter.
Elem<MultiPoly> toral_flow_apply_sym(const LieAlgebra& L, int h_basis, int var,
                                     const RingPtr& ring, Elem<MultiPoly> target);

/// Apply a fully rational word (right to left).
Elem<Rat> apply_word(const LieAlgebra& L, const FlowWord& w, Elem<Rat> target);

/// Ring housing the word's symbols, in order of first appearance (word
/// order); toral symbols are Laurent.
RingPtr word_ring(const FlowWord& w);

/// Apply a word with symbolic and/or rational parameters.
Elem<MultiPoly> apply_word_sym(const LieAlgebra& L, const FlowWord& w, const RingPtr& ring,
                               Elem<MultiPoly> target);

/// Symbolic expansion of the word acting on a basis element (H_1 by
/// default in the CLI).
Elem<MultiPoly> expand_word(const LieAlgebra& L, const FlowWord& w, const RingPtr& ring,
                            int target_basis);

/// A concrete word of nilpotent flows sending H_1 to H_i, found by BFS
/// over reflection words (each reflection is E_j:1, F_j:-1, E_j:1) and
/// verified by evaluation before being returned.
FlowWord weyl_conjugator(const LieAlgebra& L, int vertex);

/// Seeded random word: `length` steps, kinds uniform over {nilpotent E,
/// nilpotent F, toral}, parameters with numerator in [-9,9]\{0} and
/// denominator in [1,4].
FlowWord sample_word(const LieAlgebra& L, Rng& rng, int length);

/// Parse "E1:s,F1:t,H2:3/2". Generators are the simple E_i/F_i/H_i;
/// parameters are rationals or symbol names. Steps are listed in word
/// order (the rightmost acts first).
FlowWord parse_word(const LieAlgebra& L, const std::string& text);

std::string word_str(const LieAlgebra& L, const FlowWord& w);

}  // namespace lieqr
