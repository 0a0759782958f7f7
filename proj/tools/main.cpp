//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "dualband/experiment.hpp"

namespace {

struct Cli {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> csv;
  bool bits = false;
  bool check = false;
};

dualband::ExperimentConfig load_config(const Cli& cli) {
  if (cli.config_path.empty()) return {};
  return dualband::parse_config_file(cli.config_path);
}

dualband::RunOptions run_options(const Cli& cli) {
  dualband::RunOptions opts;
  opts.bits = cli.bits;
  opts.check = cli.check;
  opts.seed = cli.seed;
  opts.csv_path = cli.csv;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dualband: joint transmit-power and bandwidth allocation for an "
      "integrated sub-6 GHz / mmWave link"};
  app.require_subcommand(1);

  Cli cli;
  std::uint64_t seed_val = 0;
  std::string csv_val;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", cli.config_path,
                                "experiment config file (key = value lines)");
    if (needs_config) opt->required();
    sub->add_option("--seed", seed_val, "override channel and mmWave seeds")
        ->each([&](const std::string&) { cli.seed = seed_val; });
    sub->add_option("--csv", csv_val, "override the CSV output path")
        ->each([&](const std::string&) { cli.csv = csv_val; });
    sub->add_flag("--bits", cli.bits, "report bits-based units");
    sub->add_flag("--check", cli.check, "attach the grid-search oracle");
  };

  CLI::App* solve = app.add_subcommand("solve", "single sum-rate solve");
  add_common(solve, true);
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep with CSV");
  add_common(sweep, true);
  CLI::App* ee =
      app.add_subcommand("ee", "energy-efficiency solve (Dinkelbach)");
  add_common(ee, true);
  CLI::App* check =
      app.add_subcommand("check", "certify the solver against the oracle");
  add_common(check, true);
  CLI::App* table2 = app.add_subcommand(
      "table2", "canned high-ADC-cost comparison (full vs. optimal)");
  add_common(table2, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const dualband::RunOptions opts = run_options(cli);
    if (solve->parsed()) {
      return dualband::run_solve(load_config(cli), opts, std::cout);
    }
    if (sweep->parsed()) {
      return dualband::run_sweep(load_config(cli), opts, std::cout);
    }
    if (ee->parsed()) {
      dualband::ExperimentConfig cfg = load_config(cli);
      cfg.solver.problem = "ee";
      return dualband::run_solve(cfg, opts, std::cout);
    }
    if (check->parsed()) {
      return dualband::run_check(load_config(cli), opts, std::cout);
    }
    if (table2->parsed()) {
      return dualband::run_table2(opts, std::cout);
    }
  } catch (const dualband::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
