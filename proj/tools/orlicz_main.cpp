#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orlicz/commands.hpp"

namespace {

orlicz::RunConfig load_config(const std::string& path) {
  auto cfg = orlicz::RunConfig::from_file(path);
  if (const char* env = std::getenv("ORLICZ_SEED")) {
    cfg.solver.seed = std::stoull(env);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz energy toolbox: condition checks and certified solvers "
               "for the discretized Phi-Laplacian Dirichlet problem"};
  app.require_subcommand(1);

  std::string config_path, mode = "global-min", out_override;
  bool strict_flag = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out_override, "output directory (overrides config)");
  };

  CLI::App* check = app.add_subcommand("check", "run condition checkers and probes");
  add_common(check);
  check->add_flag("--strict", strict_flag, "exit 3 when any condition is violated");

  CLI::App* solve = app.add_subcommand("solve", "run a solver and dump report + field");
  add_common(solve);
  solve->add_option("--mode", mode, "global-min | mountain-pass | concave-convex")
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "two-solution search per lambda in lambda_list");
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    const orlicz::RunConfig cfg = load_config(config_path);
    const std::string out = out_override.empty() ? cfg.out_dir : out_override;
    if (check->parsed()) return orlicz::run_check(cfg, out, strict_flag || cfg.strict);
    if (solve->parsed()) return orlicz::run_solve(cfg, mode, out);
    return orlicz::run_sweep(cfg, out);
  } catch (const orlicz::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return orlicz::kExitUsage;
  } catch (const orlicz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return orlicz::kExitNonConvergence;
  }
}
