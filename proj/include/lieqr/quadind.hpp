#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lieqr/flows.hpp"
#include "lieqr/linalg.hpp"

namespace lieqr {

/// A finite family of exactly-evaluable functions. The evaluator maps a
/// row seed to the m-vector of values at that sample point; row i of an
/// evaluation matrix uses seed + i, so evaluation is deterministic and
/// embarrassingly parallel.
class FunctionFamily {
public:
  FunctionFamily(int dim, std::string provenance,
                 std::function<std::vector<Rat>(uint64_t)> eval)
      : dim_(dim), provenance_(std::move(provenance)), eval_(std::move(eval)) {}

  int dim() const { return dim_; }
  const std::string& provenance() const { return provenance_; }
  std::vector<Rat> row(uint64_t row_seed) const { return eval_(row_seed); }

private:
  int dim_;
  std::string provenance_;
  std::function<std::vector<Rat>(uint64_t)> eval_;
};

/// Coordinate functions of the adjoint orbit of H_1: the value vector at a
/// sampled flow word g is the coefficient vector of Ad_g(H_1).
FunctionFamily adjoint_family(std::shared_ptr<const LieAlgebra> L);

/// Embedding into the tensor product: sample points are tuples, the value
/// vector is the concatenation of per-component values.
FunctionFamily product_family(std::vector<FunctionFamily> parts);

/// Negative control: rows (1, cos, sin) at rational points of the circle.
FunctionFamily circle_family();

/// Family with the value vectors pushed through an m x m matrix (for the
/// basis-invariance property).
FunctionFamily transformed_family(FunctionFamily base, RatMatrix transform);

struct SamplerConfig {
  uint64_t seed = 1;
  std::string mode = "modular";  // "modular" | "exact"
  int multiplier = 2;            // first batch rows = multiplier * columns
  int max_batches = 4;           // doubling schedule before reporting deficiency
  int prime_retries = 5;
  int threads = 0;  // 0 = all hardware threads
};

inline int quad_cols(int m) { return m * (m + 1) / 2; }

/// Column index of the unordered pair (i <= j), colexicographic.
inline int pair_index(int i, int j) { return j * (j + 1) / 2 + i; }
std::pair<int, int> index_pair(int k);

/// Rank certificate for the family's linear span (expected rank m).
RankCertificate linear_dimension(const FunctionFamily& fam, const SamplerConfig& cfg);

/// Rank certificate for the span of pairwise products (expected rank
/// m(m+1)/2); full rank certifies quadratic independence. Deficient
/// outcomes carry a normalized candidate dependence, re-verified exactly
/// on 3 fresh seeded batches.
RankCertificate quadratic_dimension(const FunctionFamily& fam, const SamplerConfig& cfg);

}  // namespace lieqr
