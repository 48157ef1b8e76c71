#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieqr/modular.hpp"
#include "lieqr/rational.hpp"

namespace lieqr {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Rank over Q via fraction-free Bareiss elimination. Rows are scaled
/// integral first; pivot choice is the smallest-magnitude nonzero entry in
/// the current column (ties go to the lowest row index), so the result and
/// the elimination path are deterministic.
int rank_exact(RatMatrix m);

/// Rank of the reduction mod p. Throws BadPrimeError when p divides some
/// denominator. Always <= rank_exact of the same matrix.
int rank_modular(const RatMatrix& m, uint64_t p);

std::vector<uint64_t> reduce_row_mod(const std::vector<Rat>& row, uint64_t p);

/// Incremental reduced row echelon form mod p; rows are fed one at a time
/// in a fixed order, so the result is independent of how callers batch or
/// parallelize row *evaluation*.
class ModularRref {
public:
  ModularRref(int cols, uint64_t p) : cols_(cols), p_(p) {}

  /// Reduces the row against the basis; returns true if the rank grew.
  bool consume(std::vector<uint64_t> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  uint64_t prime() const { return p_; }
  bool full() const { return rank() == cols_; }

  /// Column-dependence witness: a vector c with M c = 0 (mod p), c != 0,
  /// built from the first free column. Only valid when !full().
  std::vector<uint64_t> null_vector() const;

private:
  int cols_;
  uint64_t p_;
  std::vector<std::vector<uint64_t>> rows_;  // pivot-normalized, mutually reduced
  std::vector<int> pivots_;                  // ascending, parallel to rows_
};

/// Incremental RREF over exact rationals. Same contract as ModularRref.
class ExactRref {
public:
  explicit ExactRref(int cols) : cols_(cols) {}

  bool consume(std::vector<Rat> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool full() const { return rank() == cols_; }

  std::vector<Rat> null_vector() const;

private:
  int cols_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

/// Outcome of a seeded rank computation on an evaluation matrix.
struct RankCertificate {
  std::string mode;                 // "modular" | "exact"
  std::optional<uint64_t> prime;    // set in modular mode
  uint64_t seed = 0;
  int samples = 0;                  // rows actually evaluated and consumed
  int rows = 0;                     // == samples
  int cols = 0;
  int rank = 0;
  int expected_rank = 0;
  std::string verdict;              // "certified-full-rank" | "rank-deficient-candidate"
  std::vector<Rat> candidate_null;  // normalized dependence; empty when full rank
  int confirmed_batches = 0;
  bool likely_dependent = false;

  bool certified() const { return verdict == "certified-full-rank"; }
};

}  // namespace lieqr
