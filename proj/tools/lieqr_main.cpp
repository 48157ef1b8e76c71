#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "lieqr/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for adjoint-orbit coordinate functions"};
  app.require_subcommand(1);

  lieqr::RunConfig cfg;
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub, bool with_sampler) {
    sub->add_option("--seed", cfg.seed, "RNG seed (default 1)")
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--out", cfg.out_path, "write the JSON report here");
    sub->add_flag("--stable-output", cfg.stable_output,
                  "zero elapsed_ms so repeat runs compare byte for byte");
    if (with_sampler) {
      sub->add_option("--mode", cfg.mode, "modular | exact")->check(CLI::IsMember({"modular", "exact"}));
      sub->add_option("--multiplier", cfg.multiplier, "first batch rows per column (default 2)");
      sub->add_option("--prime-retries", cfg.prime_retries, "bad-prime retries (default 5)");
      sub->add_option("--threads", cfg.threads, "row-evaluation threads (default: all cores)");
    }
  };
  auto add_series = [&](CLI::App* sub) {
    sub->add_option("--series", cfg.series, "A | D | E")->required();
    sub->add_option("--rank", cfg.rank, "Lie rank")->required();
  };

  auto* build = app.add_subcommand("build", "construct the algebra and validate it");
  add_series(build);
  add_common(build, false);
  build->add_option("--emit-structure-constants", cfg.emit_structure_path,
                    "write the bracket table as text");

  auto* quadind = app.add_subcommand("quadind", "certify quadratic independence");
  quadind->add_option("--series", cfg.series, "A | D | E");
  quadind->add_option("--rank", cfg.rank, "Lie rank");
  quadind->add_option("--fixture", cfg.fixture, "negative-control fixture (circle)");
  add_common(quadind, true);

  auto* product = app.add_subcommand("product", "certify a product family");
  product->add_option("--spec", cfg.product_spec, "components, e.g. A1,A1,D4")->required();
  add_common(product, true);

  auto* prove = app.add_subcommand("prove", "mechanized coefficient-extraction proof");
  add_series(prove);
  add_common(prove, false);
  prove->add_option("--trace", cfg.trace_path, "write the constraint trace here");

  auto* cqg = app.add_subcommand("cqg", "derive commutativity of the matrix coefficients");
  cqg->add_option("--n", cfg.cqg_n, "matrix size")->required();
  add_common(cqg, false);
  cqg->add_option("--trace", cfg.trace_path, "write per-tuple identities here");

  auto* expand = app.add_subcommand("expand", "symbolic expansion of a flow word on H_1");
  add_series(expand);
  expand->add_option("--word", cfg.word, "e.g. \"E1:s,F1:t\"")->required();
  add_common(expand, false);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  if (!seed_given) {
    if (const char* env = std::getenv("LIEQR_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);
  }

  std::string report, text;
  int status = lieqr::run(cfg, &report, &text);
  if (!text.empty()) std::cout << text;
  if (!report.empty() && cfg.out_path.empty()) std::cout << report << "\n";
  return status;
}
