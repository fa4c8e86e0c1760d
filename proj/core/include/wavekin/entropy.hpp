#ifndef WAVEKIN_ENTROPY_HPP_
#define WAVEKIN_ENTROPY_HPP_

#include "wavekin/entropy_density.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"
#include "wavekin/trajectory.hpp"

namespace wavekin {

/// Cutoff entropy functional sum_{i=1..n} e(U_i f_i)/U_i * delta, with the
/// node-0 term taken as its continuity limit e'(0) * f_0 * delta (so the
/// linear density reproduces the mass on [0, N] exactly).
double entropy_value(const Spectrum& f, const InteractionKernel& kernel,
                     const EntropyDensity& e, const FrequencyGrid& grid);

/// Discrete double integral over {0 <= omega_1 <= omega}:
///   W = sum_i sum_{j<=i} U_j U_{i-j} f_i f_j delta^2.
double dissipation_functional(const Spectrum& f,
                              const InteractionKernel& kernel,
                              const FrequencyGrid& grid);

/// Entropy-weighted dissipation restricted to the cutoff region:
///   sum_{i<=n} sum_{j<=i} U_j U_{i-j} f_i f_j e'(U_i f_i) delta^2.
double cutoff_dissipation(const Spectrum& f, const InteractionKernel& kernel,
                          const FrequencyGrid& grid, const EntropyDensity& e);

struct DissipationBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Time-integrated dissipation bound along a trajectory:
///   lhs = 2 * integral of cutoff_dissipation over [0, t_end],
///   rhs = entropy_value of the initial snapshot,
/// holds iff lhs <= rhs * (1 + 1e-6). The time quadrature matches the
/// stepper order: left endpoint for Euler, trapezoid for RK4 snapshots.
DissipationBound cumulative_dissipation_check(const Trajectory& trajectory,
                                              const InteractionKernel& kernel,
                                              const EntropyDensity& e,
                                              const FrequencyGrid& grid);

}  // namespace wavekin

#endif  // WAVEKIN_ENTROPY_HPP_
