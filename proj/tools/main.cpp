#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "locsyn/error.hpp"

int main(int argc, char** argv) {
  using namespace locsyn::cli;
  CLI::App app{"Band-constrained H2 synthesis for spatially-invariant networks"};
  app.require_subcommand(1);

  Overrides ov;
  std::string config, out, solver;
  std::uint64_t seed = 0;
  int basis = 0;
  auto add_common = [&](CLI::App* sub, bool need_config) {
    auto* c = sub->add_option("--config", config, "run configuration (JSON)");
    if (need_config) c->required();
    c->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--solver", solver, "exact|numeric|both")->check(CLI::IsMember({"exact", "numeric", "both"}));
    sub->add_option("--basis", basis, "basis size for the numeric solver")->check(CLI::PositiveNumber);
  };
  auto* syn = app.add_subcommand("synthesize", "solve one band-constrained problem");
  auto* swp = app.add_subcommand("sweep", "solve over a list of band sizes and write sweep.csv");
  auto* sim = app.add_subcommand("simulate", "simulate the closed loop on the ring");
  auto* orc = app.add_subcommand("oracle-check", "compare the exact solver with the closed forms");
  add_common(syn, true);
  add_common(swp, true);
  add_common(sim, true);
  add_common(orc, false);

  CLI11_PARSE(app, argc, argv);

  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
  CLI::App* active = app.get_subcommands().front();
  if (given(active, "--config")) ov.config = config;
  if (given(active, "--out")) ov.out = out;
  if (given(active, "--seed")) ov.seed = seed;
  if (given(active, "--solver")) ov.solver = solver;
  if (given(active, "--basis")) ov.basis = basis;

  try {
    const RunConfig cfg = load_config(ov);
    if (active == syn) return cmd_synthesize(cfg);
    if (active == swp) return cmd_sweep(cfg);
    if (active == sim) return cmd_simulate(cfg);
    return cmd_oracle_check(cfg);
  } catch (const locsyn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == locsyn::ErrorCode::ConfigError ? kConfigError : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
