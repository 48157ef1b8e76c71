#pragma once

#include <string>
#include <vector>

#include "lieqr/poly.hpp"
#include "lieqr/rational.hpp"
#include "lieqr/rootsystem.hpp"

namespace lieqr {

/// Chevalley realization on the ordered basis H_1..H_n, E_alpha (root
/// order), F_alpha (root order), with an exact integer structure table.
/// Immutable after construction; lookups are pure.
class LieAlgebra {
public:
  struct Term {
    int basis;
    long coeff;
  };
  using SparseVec = std::vector<Term>;

  const RootSystem& roots() const { return rs_; }
  const SignTable& signs() const { return signs_; }
  const CartanDatum& datum() const { return rs_.datum(); }

  int rank() const { return rs_.rank(); }
  int num_positive() const { return rs_.num_positive(); }
  int dim() const { return dim_; }

  int h_index(int vertex) const { return vertex - 1; }
  int e_index(int root_idx) const { return rank() + root_idx; }
  int f_index(int root_idx) const { return rank() + num_positive() + root_idx; }

  bool is_cartan(int basis) const { return basis < rank(); }
  bool is_e(int basis) const { return basis >= rank() && basis < rank() + num_positive(); }
  bool is_f(int basis) const { return basis >= rank() + num_positive(); }
  /// Root index for E/F basis elements.
  int root_of(int basis) const {
    return is_e(basis) ? basis - rank() : basis - rank() - num_positive();
  }
  /// 1-based vertex for Cartan basis elements.
  int vertex_of(int basis) const { return basis + 1; }

  /// [basis_i, basis_j] as a sparse integer combination.
  const SparseVec& table(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }

  std::string label(int basis) const;

  /// Iterated-bracket expression of E_alpha in simple generators:
  /// [E_{c[0]}, [E_{c[1]}, [... E_{c.back()} ...]]] = chain_sign * E_alpha.
  const std::vector<int>& bracket_chain(int root_idx) const { return chains_.at(root_idx); }
  int chain_sign(int root_idx) const { return chain_signs_.at(root_idx); }

private:
  friend LieAlgebra chevalley_algebra(const RootSystem&, const SignTable&);
  RootSystem rs_;
  SignTable signs_;
  int dim_ = 0;
  std::vector<SparseVec> table_;
  std::vector<std::vector<int>> chains_;
  std::vector<int> chain_signs_;
};

/// Populate the structure table from the root system and sign table.
LieAlgebra chevalley_algebra(const RootSystem& rs, const SignTable& signs);

/// cartan_matrix + close_roots + extraspecial_signs + chevalley_algebra.
LieAlgebra build_algebra(Series series, int rank);

// ---------------------------------------------------------------------------
// Elements: exact coefficient vectors over the basis. Scalars are Rat or
// MultiPoly.

template <class S>
using Elem = std::vector<S>;

inline bool scalar_is_zero(const Rat& r) { return r == 0; }
inline bool scalar_is_zero(const MultiPoly& p) { return p.is_zero(); }

inline Rat scalar_zero_like(const Rat&) { return Rat(0); }
inline MultiPoly scalar_zero_like(const MultiPoly& p) { return MultiPoly(p.ring()); }

inline Rat scalar_scaled(const Rat& s, long c) { return s * Rat(c); }
inline MultiPoly scalar_scaled(const MultiPoly& s, long c) { return s * Rat(c); }

inline Elem<Rat> rat_zero(const LieAlgebra& L) { return Elem<Rat>(L.dim(), Rat(0)); }
inline Elem<Rat> rat_basis(const LieAlgebra& L, int basis) {
  auto e = rat_zero(L);
  e[basis] = 1;
  return e;
}
inline Elem<MultiPoly> poly_zero(const LieAlgebra& L, const RingPtr& ring) {
  return Elem<MultiPoly>(L.dim(), MultiPoly(ring));
}

template <class S>
bool elem_is_zero(const Elem<S>& x) {
  for (const auto& v : x) {
    if (!scalar_is_zero(v)) return false;
  }
  return true;
}

/// Bilinear bracket extended from the structure table.
template <class S>
Elem<S> bracket(const LieAlgebra& L, const Elem<S>& x, const Elem<S>& y) {
  if (static_cast<int>(x.size()) != L.dim() || static_cast<int>(y.size()) != L.dim()) {
    throw std::invalid_argument("bracket: element dimension mismatch");
  }
  Elem<S> out;
  out.reserve(L.dim());
  for (int k = 0; k < L.dim(); ++k) out.push_back(scalar_zero_like(x[0]));
  for (int i = 0; i < L.dim(); ++i) {
    if (scalar_is_zero(x[i])) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (scalar_is_zero(y[j])) continue;
      const auto& terms = L.table(i, j);
      if (terms.empty()) continue;
      S prod = x[i] * y[j];
      for (const auto& t : terms) out[t.basis] += scalar_scaled(prod, t.coeff);
    }
  }
  return out;
}

/// [basis_gen, y]: single-generator bracket, the flow engine's inner loop.
template <class S>
Elem<S> bracket_basis(const LieAlgebra& L, int gen, const Elem<S>& y) {
  Elem<S> out;
  out.reserve(L.dim());
  for (int k = 0; k < L.dim(); ++k) out.push_back(scalar_zero_like(y[0]));
  for (int j = 0; j < L.dim(); ++j) {
    if (scalar_is_zero(y[j])) continue;
    for (const auto& t : L.table(gen, j)) out[t.basis] += scalar_scaled(y[j], t.coeff);
  }
  return out;
}

/// Adjoint matrix of x: column j is bracket(x, basis_j).
template <class S>
std::vector<Elem<S>> ad_matrix(const LieAlgebra& L, const Elem<S>& x) {
  std::vector<Elem<S>> cols;
  cols.reserve(L.dim());
  for (int j = 0; j < L.dim(); ++j) {
    Elem<S> col;
    col.reserve(L.dim());
    for (int k = 0; k < L.dim(); ++k) col.push_back(scalar_zero_like(x[0]));
    for (int i = 0; i < L.dim(); ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (const auto& t : L.table(i, j)) col[t.basis] += scalar_scaled(x[i], t.coeff);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationEntry {
  std::string family;
  bool pass = true;
  std::string witness;  // set on failure
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool all_pass() const {
    for (const auto& e : entries) {
      if (!e.pass) return false;
    }
    return true;
  }
};

/// Checks antisymmetry on all pairs, Jacobi on all triples (exhaustive when
/// jacobi_samples == 0, otherwise that many seeded random triples), every
/// Serre presentation relation, and the simply-laced constant bounds.
ValidationReport validate(const LieAlgebra& L, int jacobi_samples = 0, uint64_t seed = 1);

/// Text export, one bracket per line, zero brackets omitted:
///   bracket E[1,1,0] F[1,0,0] = -1 E[0,1,0]
std::string export_structure_constants(const LieAlgebra& L);

}  // namespace lieqr
