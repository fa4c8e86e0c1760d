#ifndef WAVEKIN_INTEGRATOR_HPP_
#define WAVEKIN_INTEGRATOR_HPP_

#include <utility>
#include <vector>

#include "wavekin/entropy_density.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"
#include "wavekin/trajectory.hpp"

namespace wavekin {

struct SolverConfig {
  double t_end = 0.0;
  bool auto_dt = true;     // dt recomputed from the loss rate every step
  double dt = 0.0;         // fixed step when auto_dt is false
  TimeMethod method = TimeMethod::Euler;
  double theta = 0.5;      // safety factor in (0, 1] for auto dt
  int snapshot_every = 1;
  int diagnostics_every = 1;
};

/// Monitored functionals recorded along a trajectory.
struct DiagnosticsSpec {
  std::vector<EntropyDensity> entropies;
  std::vector<double> tail_radii;
  std::vector<std::pair<double, double>> l1_windows;
};

/// Positivity-safe step size theta / max_i L_i from the current loss rate;
/// forward Euler then satisfies f_new >= f*(1 - dt*L) >= 0. Falls back to
/// theta * 1.0 when the loss rate vanishes.
double stable_dt(const Spectrum& f, const InteractionKernel& kernel,
                 const FrequencyGrid& grid, double theta);

struct StepResult {
  Spectrum spectrum;
  double clamped_mass = 0.0;  // |mass| removed by the undershoot clamp
};

/// Advances one step. Values in (-eps_clip, 0) with
/// eps_clip = 1e-14 * max f are clamped to zero and the clamped magnitude
/// recorded; an undershoot beyond eps_clip raises ContractError naming the
/// node. Energy is annihilated by every Runge-Kutta stage combination, so
/// each step preserves it to rounding.
StepResult step(const Spectrum& f, const InteractionKernel& kernel,
                const FrequencyGrid& grid, double dt, TimeMethod method);

/// Integrates to t_end recording snapshots and diagnostics at their
/// configured cadences (the initial and final states are always recorded).
/// A step failure aborts with the partial trajectory and an error record.
Trajectory integrate(const Spectrum& initial, const InteractionKernel& kernel,
                     const FrequencyGrid& grid, const SolverConfig& config,
                     const DiagnosticsSpec& diagnostics = {});

}  // namespace wavekin

#endif  // WAVEKIN_INTEGRATOR_HPP_
