#ifndef WAVEKIN_CONFIG_HPP_
#define WAVEKIN_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wavekin/grid.hpp"
#include "wavekin/integrator.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

struct InitialDataSpec {
  enum class Kind { Zero, Indicator, Bump, File };
  Kind kind = Kind::Indicator;
  double a = 1.0;
  double b = 2.0;
  double height = 1.0;
  std::string path;  // Kind::File
};

struct DiagnosticsConfig {
  std::vector<std::string> entropy_names = {"quadratic", "logtype"};
  std::vector<double> tail_radii;
  std::vector<std::pair<double, double>> l1_windows;
  // (a, b) supports of built-in bump test functions; weak residuals are
  // appended to the diagnostics CSV when any are configured.
  std::vector<std::pair<double, double>> test_functions;
};

/// Fully validated experiment description. `raw_text` keeps the source
/// document verbatim for the echo file; `hash` stamps every output.
struct ExperimentConfig {
  InteractionKernel kernel = InteractionKernel::acoustic(2);
  FrequencyGrid grid;
  InitialDataSpec initial;
  SolverConfig solver;
  DiagnosticsConfig diagnostics;
  std::string output_dir = "out";
  std::string raw_text;
  std::uint64_t hash = 0;
};

/// Parses a `key = value` document ('#' comments, dotted key paths).
/// Unknown keys are rejected; the first violated rule is reported with its
/// key path. Defaults are documented in the README.
ExperimentConfig parse_config(const std::string& text);

/// Reads the file and parses it (IoError on filesystem failure).
ExperimentConfig load_config_file(const std::string& path);

/// Materializes the configured initial datum on the configured grid.
Spectrum make_initial(const ExperimentConfig& config);

}  // namespace wavekin

#endif  // WAVEKIN_CONFIG_HPP_
