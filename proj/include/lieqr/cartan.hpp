#pragma once

#include <string>
#include <vector>

namespace lieqr {

enum class Series { A, D, E };

Series series_from_string(const std::string& s);
std::string series_name(Series s);

/// Simply-laced Cartan matrix with its Dynkin graph. Vertices are numbered
/// 1..n; see docs/numbering (README) for the fixed diagram layouts:
///   A_n: chain 1-2-...-n
///   D_n: vertex 2 is the trivalent hub adjacent to 1, 3, 4; then chain
///        4-5-...-n
///   E_n: chain 1-3-4-5-6(-7(-8)) with 2 attached to 4
/// Immutable after construction; safe for concurrent reads.
class CartanDatum {
public:
  Series series() const { return series_; }
  int rank() const { return n_; }

  /// Cartan entry a_{ij}, 1-based.
  int entry(int i, int j) const { return a_.at(i - 1).at(j - 1); }

  /// Neighbors of vertex i in the Dynkin graph, ascending.
  const std::vector<int>& neighbors(int i) const { return adj_.at(i - 1); }

  bool adjacent(int i, int j) const { return i != j && entry(i, j) != 0; }

  std::string name() const { return series_name(series_) + std::to_string(n_); }

private:
  friend CartanDatum cartan_matrix(Series, int);
  Series series_;
  int n_;
  std::vector<std::vector<int>> a_;
  std::vector<std::vector<int>> adj_;
};

/// Standard Cartan matrix of the given series/rank under the documented
/// numbering. Rejects invalid pairs (A: n>=1, D: n>=4, E: n in {6,7,8}).
CartanDatum cartan_matrix(Series series, int rank);

/// Vertices reachable from base by a path of at most m edges (vertices
/// pairwise distinct); includes base. Sorted ascending.
std::vector<int> gamma(const CartanDatum& d, int base, int m);

/// A shortest path from i to j with distinct vertices; ties broken by the
/// smallest next-vertex index. path(d, i, i) = [i].
std::vector<int> path(const CartanDatum& d, int i, int j);

/// Graph distance (edge count) between two vertices.
int graph_distance(const CartanDatum& d, int i, int j);

}  // namespace lieqr
