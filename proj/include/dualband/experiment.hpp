//
// Copyright 2026 The dualband Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DUALBAND_EXPERIMENT_HPP_
#define DUALBAND_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualband/csit.hpp"
#include "dualband/eesolver.hpp"
#include "dualband/oracle.hpp"
#include "dualband/sumrate.hpp"

namespace dualband {

/// Flat key-value experiment description (dotted section names, '#'
/// comments). Unknown keys and malformed values are reported with their line
/// number through ConfigError.
struct ExperimentConfig {
  SystemParams system;

  struct Channel {
    std::string mode = "rayleigh";  // rayleigh | compound | file
    std::uint64_t seed = 1;
    double gain_scale = 1.0;        // power scale applied to the entries
    std::string file;
    double los_gain = 1.0;          // compound-set parameters
    double epsilon = 0.0;
    double sigma_e2 = 0.0;
  } channel;

  struct Mmwave {
    double gain_a = -1.0;  // < 0: draw from the Rician generator
    std::uint64_t seed = 1;
    double scale = 1.0;
    double rice_k = 10.0;
  } mmwave;

  struct Sweep {
    std::string variable;  // adc_a | p_max | w_m_max
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_scale = true;
  } sweep;

  struct Solver {
    std::string problem = "sumrate";   // sumrate | ee
    std::string mode = "auto";         // auto | high_snr | low_snr | numeric
    double delta = 0.0;                // ee stopping threshold (0 = auto)
    std::string csit_bound = "none";   // none | lower | upper
    double p_cap = 100.0;
  } solver;

  GridSpec oracle;

  struct Output {
    std::string csv_path;
    bool plot_script = false;
  } output;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string field, const std::string& what)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

ExperimentConfig parse_config(std::istream& is);
ExperimentConfig parse_config_file(const std::string& path);

/// The channel/link/system triple a config describes, materialized.
struct Instance {
  Sub6Channel ch;
  MmWaveLink link;
  SystemParams params;
  std::optional<CsitModel> csit;
};

Instance build_instance(const ExperimentConfig& cfg);

struct RunOptions {
  bool bits = false;   // report bits-based units in the summary
  bool check = false;  // attach the grid-search oracle
  std::optional<std::uint64_t> seed;
  std::optional<std::string> csv_path;
};

/// CSV column schema shared by all runners (12 significant digits, blank for
/// fields that do not apply to a row).
extern const char* const kCsvHeader;

std::vector<double> sweep_values(const ExperimentConfig::Sweep& sweep);

// Exit codes: 0 success, 1 certification failure, 2 config error.
int run_solve(const ExperimentConfig& cfg, const RunOptions& opts,
              std::ostream& out);
int run_sweep(const ExperimentConfig& cfg, const RunOptions& opts,
              std::ostream& out);
int run_check(const ExperimentConfig& cfg, const RunOptions& opts,
              std::ostream& out);
int run_table2(const RunOptions& opts, std::ostream& out);

}  // namespace dualband

#endif  // DUALBAND_EXPERIMENT_HPP_
