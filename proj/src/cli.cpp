#include "lieqr/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "lieqr/cqgrel.hpp"
#include "lieqr/prover.hpp"
#include "lieqr/quadind.hpp"

namespace lieqr {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  if (!cfg.series.empty()) j["series"] = cfg.series;
  if (cfg.rank) j["rank"] = cfg.rank;
  if (!cfg.product_spec.empty()) j["product"] = cfg.product_spec;
  if (!cfg.fixture.empty()) j["fixture"] = cfg.fixture;
  if (cfg.cqg_n) j["n"] = cfg.cqg_n;
  if (!cfg.word.empty()) j["word"] = cfg.word;
  j["mode"] = cfg.mode;
  j["seed"] = cfg.seed;
  j["multiplier"] = cfg.multiplier;
  j["prime_retries"] = cfg.prime_retries;
  return j;
}

Json base_report(const RunConfig& cfg) {
  Json j;
  j["schema"] = 1;
  j["command"] = cfg.command;
  j["config"] = config_json(cfg);
  return j;
}

void emit(const RunConfig& cfg, const Json& report, std::string* report_json,
          const std::string& text, std::string* text_out) {
  std::string dumped = report.dump(2);
  if (report_json) *report_json = dumped;
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.out_path);
    f << dumped << "\n";
  }
  if (text_out) *text_out = text;
}

SamplerConfig sampler_config(const RunConfig& cfg) {
  SamplerConfig s;
  s.seed = cfg.seed;
  s.mode = cfg.mode;
  s.multiplier = cfg.multiplier;
  s.prime_retries = cfg.prime_retries;
  s.threads = cfg.threads;
  return s;
}

Json certificate_json(const RankCertificate& cert) {
  Json j;
  j["mode"] = cert.mode;
  if (cert.prime) j["prime"] = *cert.prime;
  j["seed"] = cert.seed;
  j["samples"] = cert.samples;
  j["cols"] = cert.cols;
  j["rank_found"] = cert.rank;
  j["expected_rank"] = cert.expected_rank;
  j["verdict"] = cert.verdict;
  if (!cert.candidate_null.empty()) {
    Json cand = Json::array();
    for (const auto& c : cert.candidate_null) cand.push_back(c.get_str());
    j["candidate_null"] = cand;
    j["confirmed_batches"] = cert.confirmed_batches;
    j["likely_dependent"] = cert.likely_dependent;
  }
  return j;
}

std::vector<std::pair<Series, int>> parse_product_spec(const std::string& spec) {
  std::vector<std::pair<Series, int>> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) continue;
    if (tok.size() < 2) throw std::invalid_argument("bad product component: " + tok);
    Series s = series_from_string(tok.substr(0, 1));
    int r = std::stoi(tok.substr(1));
    parts.emplace_back(s, r);
  }
  if (parts.empty()) throw std::invalid_argument("empty product spec");
  return parts;
}

int run_build(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  auto L = build_algebra(series_from_string(cfg.series), cfg.rank);
  int samples = cfg.rank <= 4 ? 0 : 4000;  // exhaustive Jacobi at small rank
  auto rep = validate(L, samples, cfg.seed);

  if (!cfg.emit_structure_path.empty()) {
    std::ofstream f(cfg.emit_structure_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.emit_structure_path);
    f << export_structure_constants(L);
  }

  Json j = base_report(cfg);
  j["series"] = cfg.series;
  j["rank"] = cfg.rank;
  j["dim"] = L.dim();
  j["positive_roots"] = L.num_positive();
  Json checks = Json::array();
  std::ostringstream text;
  for (const auto& e : rep.entries) {
    Json c;
    c["family"] = e.family;
    c["pass"] = e.pass;
    if (!e.pass) c["witness"] = e.witness;
    checks.push_back(c);
    text << e.family << ": " << (e.pass ? "pass" : "FAIL " + e.witness) << "\n";
  }
  j["validation"] = checks;
  j["verdict"] = rep.all_pass() ? "valid" : "invalid";
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();
  text << "verdict: " << j["verdict"].get<std::string>() << "\n";
  emit(cfg, j, report_json, text.str(), text_out);
  return rep.all_pass() ? 0 : 2;
}

int run_quadind(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  std::unique_ptr<FunctionFamily> fam;
  Json j = base_report(cfg);
  if (cfg.fixture == "circle") {
    fam = std::make_unique<FunctionFamily>(circle_family());
    j["fixture"] = cfg.fixture;
  } else if (!cfg.fixture.empty()) {
    throw std::invalid_argument("unknown fixture: " + cfg.fixture);
  } else {
    auto L = std::make_shared<const LieAlgebra>(
        build_algebra(series_from_string(cfg.series), cfg.rank));
    fam = std::make_unique<FunctionFamily>(adjoint_family(L));
    j["series"] = cfg.series;
    j["rank"] = cfg.rank;
  }
  j["dim"] = fam->dim();
  j["expected_quad_dim"] = quad_cols(fam->dim());

  auto cert = quadratic_dimension(*fam, sampler_config(cfg));
  j.update(certificate_json(cert));
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();

  std::ostringstream text;
  text << "quadratic dimension: rank " << cert.rank << " of " << cert.cols << " -> "
       << cert.verdict << "\n";
  emit(cfg, j, report_json, text.str(), text_out);
  return cert.certified() ? 0 : 2;
}

int run_product(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  auto parts = parse_product_spec(cfg.product_spec);
  std::vector<FunctionFamily> fams;
  for (auto [s, r] : parts) {
    auto L = std::make_shared<const LieAlgebra>(build_algebra(s, r));
    fams.push_back(adjoint_family(L));
  }
  auto fam = product_family(std::move(fams));

  Json j = base_report(cfg);
  j["product"] = cfg.product_spec;
  j["dim"] = fam.dim();
  j["expected_quad_dim"] = quad_cols(fam.dim());
  auto cert = quadratic_dimension(fam, sampler_config(cfg));
  j.update(certificate_json(cert));
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();

  std::ostringstream text;
  text << "product " << cfg.product_spec << ": rank " << cert.rank << " of " << cert.cols
       << " -> " << cert.verdict << "\n";
  emit(cfg, j, report_json, text.str(), text_out);
  return cert.certified() ? 0 : 2;
}

int run_prove(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  auto L = build_algebra(series_from_string(cfg.series), cfg.rank);
  ProverConfig pcfg;
  pcfg.seed = cfg.seed;
  pcfg.keep_trace = !cfg.trace_path.empty();
  auto rep = coefficient_prover(L, pcfg);

  if (!cfg.trace_path.empty()) {
    std::ofstream f(cfg.trace_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.trace_path);
    f << render_trace(L, rep);
  }

  Json j = base_report(cfg);
  j["series"] = cfg.series;
  j["rank"] = cfg.rank;
  j["dim"] = rep.dim;
  j["unknowns"] = rep.unknowns;
  j["mode"] = "symbolic";
  j["seed"] = cfg.seed;
  j["prime"] = rep.prime;
  j["words"] = rep.words;
  j["extension_words"] = rep.extension_words;
  j["constraints"] = rep.constraints;
  j["rank_found"] = rep.rank;
  j["nullspace_dim"] = rep.nullspace_dim;
  Json named = Json::array();
  for (const auto& id : rep.named) {
    Json e;
    e["identity"] = id.name;
    e["word"] = id.word;
    e["monomial"] = id.monomial;
    e["matched"] = id.matched;
    named.push_back(e);
  }
  j["named_identities"] = named;
  j["verdict"] = rep.closed() ? "proof-closed" : "nullspace-nonzero";
  if (!cfg.trace_path.empty()) j["trace_path"] = cfg.trace_path;
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();

  std::ostringstream text;
  text << "unknowns " << rep.unknowns << ", constraints " << rep.constraints << ", nullspace "
       << rep.nullspace_dim << " -> " << j["verdict"].get<std::string>() << "\n";
  for (const auto& id : rep.named) {
    text << (id.matched ? "[matched] " : "[MISSING] ") << id.name << "\n";
  }
  emit(cfg, j, report_json, text.str(), text_out);
  return rep.closed() ? 0 : 2;
}

int run_cqg(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  auto rep = derive_commutativity(cfg.cqg_n);
  std::string trace = render_cqg_trace(rep);
  if (!cfg.trace_path.empty()) {
    std::ofstream f(cfg.trace_path);
    if (!f) throw std::runtime_error("cannot write " + cfg.trace_path);
    f << trace;
  }
  Json j = base_report(cfg);
  j["n"] = rep.n;
  j["tuples"] = rep.tuples.size();
  int failures = 0;
  for (const auto& t : rep.tuples) failures += t.ok ? 0 : 1;
  j["failures"] = failures;
  j["kappa_row_checks"] = rep.kappa_row_checks;
  j["verdict"] = rep.all_ok() ? "all-verified" : "counterexample";
  if (!cfg.trace_path.empty()) j["trace_path"] = cfg.trace_path;
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();
  emit(cfg, j, report_json, trace, text_out);
  return rep.all_ok() ? 0 : 2;
}

int run_expand(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  Stopwatch sw;
  auto L = build_algebra(series_from_string(cfg.series), cfg.rank);
  auto w = parse_word(L, cfg.word);
  auto ring = word_ring(w);
  auto h = expand_word(L, w, ring, L.h_index(1));

  Json j = base_report(cfg);
  j["series"] = cfg.series;
  j["rank"] = cfg.rank;
  j["word"] = cfg.word;
  Json exp = Json::object();
  std::ostringstream text;
  for (int b = 0; b < L.dim(); ++b) {
    if (h[b].is_zero()) continue;
    exp[L.label(b)] = h[b].str();
    text << L.label(b) << ": " << h[b].str() << "\n";
  }
  j["expansion"] = exp;
  j["elapsed_ms"] = cfg.stable_output ? 0 : sw.ms();
  emit(cfg, j, report_json, text.str(), text_out);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::string* report_json, std::string* text_out) {
  try {
    if (cfg.command == "build") return run_build(cfg, report_json, text_out);
    if (cfg.command == "quadind") return run_quadind(cfg, report_json, text_out);
    if (cfg.command == "product") return run_product(cfg, report_json, text_out);
    if (cfg.command == "prove") return run_prove(cfg, report_json, text_out);
    if (cfg.command == "cqg") return run_cqg(cfg, report_json, text_out);
    if (cfg.command == "expand") return run_expand(cfg, report_json, text_out);
    if (text_out) *text_out = "unknown command: " + cfg.command + "\n";
    return 1;
  } catch (const std::exception& e) {
    if (text_out) *text_out = std::string("error: ") + e.what() + "\n";
    return 1;
  }
}

}  // namespace lieqr
