#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "lieqr/cartan.hpp"

namespace lieqr {

struct Root {
  std::vector<int> coeffs;  // over simple roots, index 0 <-> vertex 1
  int height = 0;           // sum of coeffs
};

/// Positive roots of a simply-laced system. The global root order is
/// (height ascending, then: at the first differing coefficient the larger
/// entry sorts first), which puts the simple roots in vertex order and
/// makes every downstream choice deterministic.
class RootSystem {
public:
  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  int algebra_dim() const { return rank() + 2 * num_positive(); }

  const Root& positive(int idx) const { return roots_.at(idx); }

  /// Index in the global order, or -1 when not a positive root.
  int index_of(const std::vector<int>& coeffs) const;
  bool is_positive_root(const std::vector<int>& coeffs) const { return index_of(coeffs) >= 0; }

  /// <alpha, H_i> = sum_j a_{ij} c_j, vertex 1-based.
  int pairing(int root_idx, int vertex) const { return pairing_.at(root_idx).at(vertex - 1); }

  /// Index of the simple root alpha_v.
  int simple_index(int vertex) const { return simple_idx_.at(vertex - 1); }

  /// Extraspecial decomposition of a non-simple root: the smallest simple
  /// vertex i with alpha - alpha_i again a positive root.
  struct Parent {
    int simple_vertex;
    int rest_idx;
  };
  const Parent& parent(int idx) const;

private:
  friend RootSystem close_roots(const CartanDatum&);
  CartanDatum datum_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> pairing_;
  std::vector<int> simple_idx_;
  std::vector<Parent> parents_;  // parallel to roots_; simple roots have simple_vertex = 0
};

/// All positive roots by closure from the simple seeds.
RootSystem close_roots(const CartanDatum& d);

/// Signs eps(alpha, beta) for ordered pairs of positive roots with
/// alpha + beta a root; antisymmetric, extraspecial pairs carry +1 and the
/// rest follow from the Jacobi identity. An inconsistency during
/// derivation throws SignConsistencyError (it would mean a bug, not bad
/// input).
struct SignConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

class SignTable {
public:
  /// Sign for an ordered pair of positive-root indices; throws when the
  /// pair's sum is not a root.
  int sign(int a, int b) const;
  bool has(int a, int b) const { return table_.count({a, b}) != 0; }
  size_t size() const { return table_.size(); }

private:
  friend SignTable extraspecial_signs(const RootSystem&);
  std::map<std::pair<int, int>, int> table_;
};

SignTable extraspecial_signs(const RootSystem& rs);

}  // namespace lieqr
