#include "lieqr/quadind.hpp"

#include <atomic>
#include <thread>

namespace lieqr {

FunctionFamily adjoint_family(std::shared_ptr<const LieAlgebra> L) {
  int dim = L->dim();
  auto eval = [L](uint64_t row_seed) {
    Rng rng(row_seed);
    auto word = sample_word(*L, rng, 2 * L->dim());
    return apply_word(*L, word, rat_basis(*L, L->h_index(1)));
  };
  return FunctionFamily(dim, "adjoint-orbit", std::move(eval));
}

FunctionFamily product_family(std::vector<FunctionFamily> parts) {
  if (parts.empty()) throw std::invalid_argument("product_family: need at least one family");
  if (parts.size() == 1) return parts[0];
  int dim = 0;
  for (const auto& p : parts) dim += p.dim();
  auto shared = std::make_shared<std::vector<FunctionFamily>>(std::move(parts));
  auto eval = [shared](uint64_t row_seed) {
    std::vector<Rat> out;
    for (size_t i = 0; i < shared->size(); ++i) {
      auto vals = (*shared)[i].row(Rng::mix(row_seed, i + 1));
      out.insert(out.end(), vals.begin(), vals.end());
    }
    return out;
  };
  return FunctionFamily(dim, "product", std::move(eval));
}

FunctionFamily circle_family() {
  auto eval = [](uint64_t row_seed) {
    Rng rng(row_seed);
    long num = rng.range(-9, 9);
    while (num == 0) num = rng.range(-9, 9);
    Rat r = make_rat(num, rng.range(1, 4));
    Rat denom = 1 + r * r;
    return std::vector<Rat>{Rat(1), (1 - r * r) / denom, 2 * r / denom};
  };
  return FunctionFamily(3, "custom-circle", std::move(eval));
}

FunctionFamily transformed_family(FunctionFamily base, RatMatrix transform) {
  int m = base.dim();
  if (static_cast<int>(transform.size()) != m) {
    throw std::invalid_argument("transformed_family: matrix/dimension mismatch");
  }
  auto shared = std::make_shared<FunctionFamily>(std::move(base));
  auto tm = std::make_shared<RatMatrix>(std::move(transform));
  auto eval = [shared, tm, m](uint64_t row_seed) {
    auto v = shared->row(row_seed);
    std::vector<Rat> out(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if ((*tm)[i][j] != 0) out[i] += (*tm)[i][j] * v[j];
      }
    }
    return out;
  };
  return FunctionFamily(m, shared->provenance() + "+basis-change", std::move(eval));
}

std::pair<int, int> index_pair(int k) {
  int j = 0;
  while ((j + 1) * (j + 2) / 2 <= k) ++j;
  return {k - j * (j + 1) / 2, j};
}

namespace {

// Evaluate rows [first, first+count) of the family in parallel; results
// land by index, so the outcome is independent of the thread count.
std::vector<std::vector<Rat>> evaluate_rows(const FunctionFamily& fam, uint64_t seed,
                                            uint64_t first, int count, int threads) {
  std::vector<std::vector<Rat>> rows(count);
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? static_cast<int>(hw) : 1;
  }
  threads = std::min<int>(threads, count > 0 ? count : 1);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) rows[i] = fam.row(seed + first + i);
    return rows;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        rows[i] = fam.row(seed + first + i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return rows;
}

std::vector<Rat> quad_row_exact(const std::vector<Rat>& v) {
  int m = static_cast<int>(v.size());
  std::vector<Rat> out(quad_cols(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i <= j; ++i) out[pair_index(i, j)] = v[i] * v[j];
  }
  return out;
}

std::vector<uint64_t> quad_row_mod(const std::vector<uint64_t>& v, uint64_t p) {
  int m = static_cast<int>(v.size());
  std::vector<uint64_t> out(quad_cols(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i <= j; ++i) out[pair_index(i, j)] = mulmod(v[i], v[j], p);
  }
  return out;
}

// Normalize so the first nonzero entry is +1.
void normalize_candidate(std::vector<Rat>& c) {
  for (const auto& v : c) {
    if (v != 0) {
      Rat inv = 1 / v;
      for (auto& x : c) x *= inv;
      return;
    }
  }
}

struct Core {
  const FunctionFamily& fam;
  const SamplerConfig& cfg;
  bool quadratic;
  int cols;

  std::vector<std::vector<Rat>> linear_rows;  // cache shared across prime retries

  void prefetch(int upto) {
    if (upto > static_cast<int>(linear_rows.size())) {
      int count = upto - static_cast<int>(linear_rows.size());
      auto fresh = evaluate_rows(fam, cfg.seed, linear_rows.size(), count, cfg.threads);
      for (auto& r : fresh) linear_rows.push_back(std::move(r));
    }
  }

  std::vector<int> batch_plan() const {
    // Cumulative row targets double per batch: b, 2b, 4b, ...
    std::vector<int> plan;
    int total = cfg.multiplier * cols;
    for (int b = 0; b < cfg.max_batches; ++b) {
      plan.push_back(total);
      total *= 2;
    }
    return plan;
  }

  // Keep evaluation in parallel-friendly chunks while bounding waste past
  // an early full-rank exit.
  void ensure_row(int index, int target) {
    if (index < static_cast<int>(linear_rows.size())) return;
    int chunk = std::max(128, cfg.threads * 16);
    prefetch(std::min(target, index + chunk));
  }

  bool verify_candidate_exact(const std::vector<Rat>& cand, uint64_t fresh_start, int batch,
                              int batch_rows) {
    auto rows = evaluate_rows(
        fam, cfg.seed, fresh_start + static_cast<uint64_t>(batch) * batch_rows, batch_rows,
        cfg.threads);
    for (const auto& v : rows) {
      Rat acc(0);
      if (quadratic) {
        for (int j = 0; j < fam.dim(); ++j) {
          for (int i = 0; i <= j; ++i) {
            const Rat& c = cand[pair_index(i, j)];
            if (c != 0) acc += c * v[i] * v[j];
          }
        }
      } else {
        for (int i = 0; i < cols; ++i) {
          if (cand[i] != 0) acc += cand[i] * v[i];
        }
      }
      if (acc != 0) return false;
    }
    return true;
  }

  void attach_candidate(RankCertificate& cert, std::vector<Rat> cand, int consumed) {
    normalize_candidate(cand);
    cert.candidate_null = std::move(cand);
    int confirmed = 0;
    for (int b = 0; b < 3; ++b) {
      if (verify_candidate_exact(cert.candidate_null, consumed, b, cols)) ++confirmed;
    }
    cert.confirmed_batches = confirmed;
    cert.likely_dependent = confirmed == 3;
  }

  RankCertificate run_modular() {
    RankCertificate cert;
    cert.mode = "modular";
    cert.seed = cfg.seed;
    cert.cols = cols;
    cert.expected_rank = cols;

    for (int attempt = 0;; ++attempt) {
      Rng prng(Rng::mix(cfg.seed, 0x7072696dull + attempt));
      uint64_t p = random_prime(prng);
      try {
        ModularRref rref(cols, p);
        int consumed = 0;
        for (int target : batch_plan()) {
          while (consumed < target && !rref.full()) {
            ensure_row(consumed, target);
            auto vmod = reduce_row_mod(linear_rows[consumed], p);
            rref.consume(quadratic ? quad_row_mod(vmod, p) : std::move(vmod));
            ++consumed;
          }
          if (rref.full()) break;
        }
        cert.prime = p;
        cert.samples = consumed;
        cert.rows = consumed;
        cert.rank = rref.rank();
        if (rref.full()) {
          cert.verdict = "certified-full-rank";
          return cert;
        }
        cert.verdict = "rank-deficient-candidate";
        auto cmod = rref.null_vector();
        uint64_t lead = 0;
        for (uint64_t v : cmod) {
          if (v) {
            lead = v;
            break;
          }
        }
        bool lifted = false;
        std::vector<Rat> cand(cols, Rat(0));
        if (lead) {
          uint64_t inv = invmod(lead, p);
          lifted = true;
          for (int k = 0; k < cols; ++k) {
            auto lift = rational_reconstruct(mulmod(cmod[k], inv, p), p);
            if (!lift) {
              lifted = false;
              break;
            }
            cand[k] = *lift;
          }
        }
        if (!lifted) {
          // a dependence that does not lift to small rationals points at an
          // unlucky prime; treat it like a bad prime and redraw
          if (attempt + 1 < cfg.prime_retries) continue;
          return cert;
        }
        attach_candidate(cert, std::move(cand), consumed);
        return cert;
      } catch (const BadPrimeError&) {
        if (attempt + 1 >= cfg.prime_retries) throw;
      }
    }
  }

  RankCertificate run_exact() {
    RankCertificate cert;
    cert.mode = "exact";
    cert.seed = cfg.seed;
    cert.cols = cols;
    cert.expected_rank = cols;

    RatMatrix matrix;
    int consumed = 0;
    int rank = 0;
    for (int target : batch_plan()) {
      prefetch(target);
      while (consumed < target) {
        matrix.push_back(quadratic ? quad_row_exact(linear_rows[consumed])
                                   : linear_rows[consumed]);
        ++consumed;
      }
      rank = rank_exact(matrix);
      if (rank == cols) break;
    }
    cert.samples = consumed;
    cert.rows = consumed;
    cert.rank = rank;
    if (rank == cols) {
      cert.verdict = "certified-full-rank";
      return cert;
    }
    cert.verdict = "rank-deficient-candidate";
    ExactRref rref(cols);
    for (auto& row : matrix) rref.consume(std::move(row));
    attach_candidate(cert, rref.null_vector(), consumed);
    return cert;
  }

  RankCertificate run() {
    if (cfg.mode == "modular") return run_modular();
    if (cfg.mode == "exact") return run_exact();
    throw std::invalid_argument("unknown mode: " + cfg.mode);
  }
};

}  // namespace

RankCertificate linear_dimension(const FunctionFamily& fam, const SamplerConfig& cfg) {
  if (fam.dim() < 1) throw std::invalid_argument("linear_dimension: empty family");
  Core core{fam, cfg, false, fam.dim(), {}};
  return core.run();
}

RankCertificate quadratic_dimension(const FunctionFamily& fam, const SamplerConfig& cfg) {
  if (fam.dim() < 1) throw std::invalid_argument("quadratic_dimension: empty family");
  Core core{fam, cfg, true, quad_cols(fam.dim()), {}};
  return core.run();
}

}  // namespace lieqr
