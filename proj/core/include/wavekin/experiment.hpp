#ifndef WAVEKIN_EXPERIMENT_HPP_
#define WAVEKIN_EXPERIMENT_HPP_

#include <string>
#include <vector>

#include "wavekin/config.hpp"
#include "wavekin/trajectory.hpp"

namespace wavekin {

struct MonotonicityVerdict {
  std::string quantity;
  double initial = 0.0;
  double final_value = 0.0;
  double max_step_violation = 0.0;
  double allowed = 0.0;
  bool pass = false;
};

struct TrendVerdict {
  std::string quantity;
  double value = 0.0;   // measured statistic
  bool pass = false;
};

/// Everything `run` computed and wrote; exit_code follows the CLI contract
/// (0 ok, 3 numerical-contract violation).
struct RunResult {
  Trajectory trajectory;
  std::vector<std::string> columns;
  std::vector<MonotonicityVerdict> monotonicity;
  double energy_drift_rel = 0.0;
  bool energy_pass = false;
  bool positivity_support_pass = false;
  std::vector<TrendVerdict> trends;
  std::vector<std::string> files_written;
  int exit_code = 0;
};

/// Runs the configured experiment and emits artifacts under
/// config.output_dir: the verbatim config echo, diagnostics.csv, snapshot
/// CSVs at the snapshot cadence, summary.json and manifest.json. Every file
/// carries the config hash in a header comment.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace wavekin

#endif  // WAVEKIN_EXPERIMENT_HPP_
