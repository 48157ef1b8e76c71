// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion holds within its stated time budget.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <vector>

#include "lieqr/cli.hpp"
#include "lieqr/cqgrel.hpp"
#include "lieqr/fidelity.hpp"
#include "lieqr/prover.hpp"
#include "lieqr/quadind.hpp"

using namespace lieqr;

namespace {

struct Criterion {
  std::string id;
  bool pass = false;
  std::string detail;
};

std::vector<Criterion> results;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void record(const std::string& id, bool pass, const std::string& detail) {
  results.push_back({id, pass, detail});
  std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << ": " << detail << "\n"
            << std::flush;
}

std::shared_ptr<const LieAlgebra> alg(Series s, int n) {
  return std::make_shared<const LieAlgebra>(build_algebra(s, n));
}

const std::vector<std::pair<Series, int>> kDeskSystems{
    {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::D, 4}};

// 1. antisymmetry, Jacobi (all triples) and all Serre relations, < 10 s total
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;
  for (auto [s, n] : kDeskSystems) {
    auto L = build_algebra(s, n);
    auto rep = validate(L, 0, 1);  // exhaustive Jacobi
    if (!rep.all_pass()) {
      ok = false;
      for (const auto& e : rep.entries) {
        if (!e.pass) d << series_name(s) << n << " " << e.family << " (" << e.witness << ") ";
      }
    }
  }
  double el = seconds_since(t0);
  if (el >= 10.0) ok = false;
  d << "A1,A2,A3,D4 exhaustive validation in " << el << " s (limit 10)";
  record("1 algebra-validity", ok, d.str());
}

// 2. engine expansions match the displayed flow formulas; the three-step
// word comparison runs and the s^2 t discrepancy is reported
void criterion2() {
  bool ok = true;
  std::ostringstream d;
  int formulas = 0;
  for (auto [s, n] : std::vector<std::pair<Series, int>>{
           {Series::A, 1}, {Series::A, 2}, {Series::A, 3}}) {
    for (const auto& c : check_flow_formulas(build_algebra(s, n))) {
      ++formulas;
      if (!c.pass) {
        ok = false;
        d << series_name(s) << n << " " << c.name << ": " << c.detail << "; ";
      }
    }
  }
  auto reports = check_triple_word(build_algebra(Series::A, 3));
  if (reports.size() != 1) ok = false;
  for (const auto& r : reports) {
    if (!r.rest_matches || !r.discrepancy_present() || r.engine_inner_s2t != Rat(-1)) ok = false;
    d << formulas << " formula instances match; " << r.summary;
  }
  record("2 flow-formula-fidelity", ok, d.str());
}

// 3. quadratic_dimension certifies m(m+1)/2 at desk scale, each < 60 s;
// A1 and A2 also in exact mode with identical verdicts
bool g_c3_all_certified = true;

void criterion3() {
  const int expected[] = {6, 36, 120, 406};
  bool ok = true;
  std::ostringstream d;
  int idx = 0;
  for (auto [s, n] : kDeskSystems) {
    auto t0 = std::chrono::steady_clock::now();
    SamplerConfig cfg;
    auto cert = quadratic_dimension(adjoint_family(alg(s, n)), cfg);
    double el = seconds_since(t0);
    bool this_ok = cert.certified() && cert.rank == expected[idx] && el < 60.0;
    if (!cert.certified()) g_c3_all_certified = false;
    ok = ok && this_ok;
    d << series_name(s) << n << "=" << cert.rank << "/" << expected[idx] << " ("
      << (cert.certified() ? "certified" : "deficient") << ", " << el << " s) ";
    ++idx;
  }
  for (auto [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 1}, {Series::A, 2}}) {
    SamplerConfig cfg;
    cfg.mode = "exact";
    auto modular = quadratic_dimension(adjoint_family(alg(s, n)), SamplerConfig{});
    auto exact = quadratic_dimension(adjoint_family(alg(s, n)), cfg);
    if (!(exact.certified() && exact.verdict == modular.verdict)) ok = false;
    d << series_name(s) << n << "-exact=" << exact.rank << " ";
  }
  record("3 quadratic-independence", ok, d.str());
}

void criterion3_e6() {
  auto t0 = std::chrono::steady_clock::now();
  SamplerConfig cfg;
  auto cert = quadratic_dimension(adjoint_family(alg(Series::E, 6)), cfg);
  double el = seconds_since(t0);
  bool ok = cert.certified() && cert.rank == 3081 && el < 1800.0;
  std::ostringstream d;
  d << "E6=" << cert.rank << "/3081 (" << cert.verdict << ", " << el << " s, limit 1800)";
  record("3e6 optional-e6", ok, d.str());
}

// 4. linear_dimension certifies rank N, each < 5 s
void criterion4() {
  const int expected[] = {3, 8, 15, 28};
  bool ok = true;
  std::ostringstream d;
  int idx = 0;
  for (auto [s, n] : kDeskSystems) {
    auto t0 = std::chrono::steady_clock::now();
    SamplerConfig cfg;
    auto cert = linear_dimension(adjoint_family(alg(s, n)), cfg);
    double el = seconds_since(t0);
    if (!(cert.certified() && cert.rank == expected[idx] && el < 5.0)) ok = false;
    d << series_name(s) << n << "=" << cert.rank << "/" << expected[idx] << " (" << el << " s) ";
    ++idx;
  }
  record("4 linear-span", ok, d.str());
}

// 5. the prover closes on A2 (and A3, within the cap), the trace carries
// the displayed identities, and the verdict agrees with criterion 3
void criterion5() {
  bool ok = true;
  std::ostringstream d;
  for (auto [s, n] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::A, 3}}) {
    auto L = build_algebra(s, n);
    ProverConfig cfg;
    auto rep = coefficient_prover(L, cfg);
    bool named_ok = !rep.named.empty();
    for (const auto& id : rep.named) named_ok = named_ok && id.matched;
    bool this_ok = rep.closed() && named_ok;
    ok = ok && this_ok;
    d << series_name(s) << n << ": nullspace " << rep.nullspace_dim << ", " << rep.named.size()
      << " named identities " << (named_ok ? "matched" : "MISSING") << "; ";
  }
  if (!g_c3_all_certified) ok = false;
  d << "agrees with criterion 3 certificates";
  record("5 mechanized-proof", ok, d.str());
}

// 6. product families: the stated counts are 21 for A1xA1 and 66 for A1xA2
void criterion6() {
  bool ok = true;
  std::ostringstream d;
  struct Case {
    const char* spec;
    std::vector<std::pair<Series, int>> parts;
    int expected;
  };
  for (const auto& c : std::vector<Case>{
           {"A1,A1", {{Series::A, 1}, {Series::A, 1}}, 21},
           {"A1,A2", {{Series::A, 1}, {Series::A, 2}}, 66}}) {
    std::vector<FunctionFamily> fams;
    for (auto [s, n] : c.parts) fams.push_back(adjoint_family(alg(s, n)));
    auto fam = product_family(std::move(fams));
    SamplerConfig cfg;
    auto cert = quadratic_dimension(fam, cfg);
    bool this_ok = cert.certified() && cert.rank == c.expected &&
                   cert.cols == quad_cols(fam.dim());
    ok = ok && this_ok;
    d << c.spec << "=" << cert.rank << "/" << c.expected << " (" << cert.verdict;
    if (!cert.candidate_null.empty() && cert.likely_dependent) {
      d << "; dependence confirmed exactly on " << cert.confirmed_batches << " fresh batches:";
      for (int k = 0; k < cert.cols; ++k) {
        if (cert.candidate_null[k] != 0) {
          auto [i, j] = index_pair(k);
          d << " " << cert.candidate_null[k].get_str() << "*(" << i + 1 << "," << j + 1 << ")";
        }
      }
    }
    d << ") ";
  }
  if (!ok) {
    d << "| each factor's Killing form makes one quadratic combination constant, so the "
         "concatenated products carry the confirmed dependence above";
  }
  record("6 product-counts", ok, d.str());
}

// 7. the circle fixture: rank 5 of 6 with the exact candidate confirmed
void criterion7() {
  SamplerConfig cfg;
  auto cert = quadratic_dimension(circle_family(), cfg);
  std::vector<Rat> want{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(-1)};
  bool ok = cert.rank == 5 && cert.cols == 6 && cert.candidate_null == want &&
            cert.confirmed_batches == 3 && cert.likely_dependent;
  std::ostringstream d;
  d << "rank " << cert.rank << "/6, candidate (1,1)-(2,2)-(3,3) confirmed on "
    << cert.confirmed_batches << " fresh batches";
  record("7 negative-control", ok, d.str());
}

// 8. r2 - r6 = 2[Q_ik,Q_jl] for every tuple, n <= 5 exhaustive, < 5 s
void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int tuples = 0;
  for (int n = 2; n <= 5; ++n) {
    auto rep = derive_commutativity(n);
    tuples += static_cast<int>(rep.tuples.size());
    if (!rep.all_ok()) ok = false;
  }
  double el = seconds_since(t0);
  if (el >= 5.0) ok = false;
  std::ostringstream d;
  d << tuples << " tuples verified in " << el << " s (limit 5)";
  record("8 commutativity-core", ok, d.str());
}

// 9. byte-identical reports for repeat certified runs at any thread count
void criterion9() {
  bool ok = true;
  std::ostringstream d;
  auto repeat = [&](RunConfig cfg, const char* name) {
    cfg.stable_output = true;
    std::string a, b;
    cfg.threads = 1;
    int s1 = run(cfg, &a);
    cfg.threads = 2;
    int s2 = run(cfg, &b);
    bool same = (s1 == s2) && !a.empty() && a == b;
    if (!same) ok = false;
    d << name << (same ? " identical; " : " DIFFERS; ");
  };
  RunConfig quad;
  quad.command = "quadind";
  quad.series = "A";
  quad.rank = 2;
  repeat(quad, "quadind-A2");
  RunConfig quade;
  quade.command = "quadind";
  quade.series = "A";
  quade.rank = 1;
  quade.mode = "exact";
  repeat(quade, "quadind-A1-exact");
  RunConfig prove;
  prove.command = "prove";
  prove.series = "A";
  prove.rank = 2;
  repeat(prove, "prove-A2");
  RunConfig cqg;
  cqg.command = "cqg";
  cqg.cqg_n = 3;
  repeat(cqg, "cqg-3");
  record("9 determinism", ok, d.str());
}

// 10. rank_modular <= rank_exact on 500 seeded matrices, equality for
// valid primes at height < 2^16
void criterion10() {
  Rng rng(424242);
  Rng prng(Rng::mix(424242, 1));
  uint64_t p = random_prime(prng);
  bool ok = true;
  for (int iter = 0; iter < 500; ++iter) {
    int rows = 1 + static_cast<int>(rng.below(8));
    int cols = 1 + static_cast<int>(rng.below(8));
    RatMatrix m(rows, std::vector<Rat>(cols));
    for (auto& row : m) {
      for (auto& v : row) v = make_rat(rng.range(-99, 99), rng.range(1, 9));
    }
    if (rows >= 2 && rng.below(4) == 0) m[rows - 1] = m[0];
    int re = rank_exact(m);
    int rm = rank_modular(m, p);
    if (rm > re || rm != re) {
      ok = false;
      break;
    }
  }
  std::ostringstream d;
  d << "500 seeded matrices: rank_modular <= rank_exact with equality (prime " << p << ")";
  record("10 soundness-regression", ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  bool with_e6 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--with-e6") == 0) with_e6 = true;
  }

  criterion1();
  criterion2();
  criterion3();
  if (with_e6) criterion3_e6();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  int failed = 0;
  for (const auto& c : results) failed += c.pass ? 0 : 1;
  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: " + std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed == 0 ? 0 : 2;
}
