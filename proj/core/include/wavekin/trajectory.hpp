#ifndef WAVEKIN_TRAJECTORY_HPP_
#define WAVEKIN_TRAJECTORY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wavekin/grid.hpp"

namespace wavekin {

enum class TimeMethod { Euler, Rk4 };

struct TrajectorySnapshot {
  double time = 0.0;
  Spectrum spectrum;
};

/// One diagnostics row. The vector-valued entries are aligned with the
/// monitored-quantity lists the trajectory was produced with.
struct DiagnosticsRecord {
  double time = 0.0;
  double mass_0N = 0.0;
  double energy = 0.0;
  std::vector<double> entropies;
  double dissipation_W = 0.0;
  std::vector<double> tail_fractions;
  std::vector<double> l1_windows;
  double clamped_mass = 0.0;  // cumulative clamped |mass| up to this time
};

struct Trajectory {
  std::vector<TrajectorySnapshot> snapshots;  // strictly increasing times
  std::vector<DiagnosticsRecord> records;
  TimeMethod method = TimeMethod::Euler;
  long steps = 0;
  double clamped_mass_total = 0.0;
  std::optional<std::string> error;  // set when the run aborted early

  const Spectrum& final_spectrum() const { return snapshots.back().spectrum; }
};

}  // namespace wavekin

#endif  // WAVEKIN_TRAJECTORY_HPP_
