#ifndef WAVEKIN_COLLISION_HPP_
#define WAVEKIN_COLLISION_HPP_

#include <vector>

#include "wavekin/entropy_density.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"

namespace wavekin {

/// Per-node value of the cutoff collision operator. q_i vanishes exactly
/// beyond 2N; the optional split satisfies q = G - (L - A)*f with all three
/// parts nonnegative for nonnegative spectra.
struct CollisionOutput {
  std::vector<double> q;
};

struct GainLossSplit {
  std::vector<double> gain;           // G_i
  std::vector<double> loss_rate;      // L_i (multiplies f_i)
  std::vector<double> transfer_rate;  // A_i (multiplies f_i)
};

/// Cutoff collision operator on the lattice. With n = cutoff_index and
/// U_k tabulated at the nodes,
///
///   q_i = sum_{j=0}^{i}   delta * U_j U_{i-j} [ f_j f_{i-j} X(j<=n & i-j<=n)
///                                             - f_i f_j    X(i<=n & j<=n)
///                                             - f_i f_{i-j} X(i<=n & i-j<=n) ]
///       - 2 sum_{j=0}^{m-i} delta * U_j U_{i+j} [ f_j f_i    X(i<=n & j<=n)
///                                               - f_j f_{i+j} X(j<=n & i+j<=n)
///                                               - f_i f_{i+j} X(i<=n & i+j<=n) ].
///
/// The resonance constraint is resolved exactly by index arithmetic; every
/// node carries the uniform quadrature weight delta, which makes the energy
/// sum telescope exactly. Inner sums run in ascending j; the outer loop over
/// i parallelizes. O(m^2).
CollisionOutput q_cutoff(const Spectrum& f, const InteractionKernel& kernel,
                         const FrequencyGrid& grid);

/// Independent oracle: same contract as q_cutoff, implemented by direct
/// enumeration with compensated summation, sharing nothing with q_cutoff
/// beyond kernel evaluation.
CollisionOutput q_cutoff_bruteforce(const Spectrum& f,
                                    const InteractionKernel& kernel,
                                    const FrequencyGrid& grid);

GainLossSplit gain_loss_split(const Spectrum& f,
                              const InteractionKernel& kernel,
                              const FrequencyGrid& grid);

/// sum_i omega_i U_i q_i delta. Zero up to rounding for every nonnegative
/// spectrum: omega_i = omega_j + omega_{i-j} holds exactly on the lattice.
double energy_production(const Spectrum& f, const InteractionKernel& kernel,
                         const FrequencyGrid& grid);

/// sum_{i<=n} q_i e'(U_i f_i) delta — the semi-discrete time derivative of
/// the cutoff entropy. Nonpositive up to rounding for every nonnegative
/// spectrum and admissible (kernel, e).
double entropy_production(const Spectrum& f, const InteractionKernel& kernel,
                          const FrequencyGrid& grid, const EntropyDensity& e);

struct LipschitzCheck {
  double lhs = 0.0;    // ||(1+U)(Q_N[f]-Q_N[g])||_1
  double rhs = 0.0;    // 9 M_N^3 (||(1+U)f|| + ||(1+U)g||) ||(1+U)(f-g)||
  double ratio = 0.0;  // lhs / rhs (0 when rhs = 0)
};

/// Evaluates both sides of the weighted-L1 local Lipschitz estimate with
/// constant 9*M_N^3, M_N = max_{omega_i <= 2N} (1 + U_i).
LipschitzCheck lipschitz_check(const Spectrum& f, const Spectrum& g,
                               const InteractionKernel& kernel,
                               const FrequencyGrid& grid);

namespace internal {

/// Unchecked operator evaluation on raw node values with a pre-tabulated
/// kernel. The sums are polynomial in f, so Runge-Kutta stage states that
/// dip below zero are still well defined; the stepper relies on that.
std::vector<double> collision_rhs(const std::vector<double>& f,
                                  const std::vector<double>& U_table,
                                  const FrequencyGrid& grid);

}  // namespace internal

}  // namespace wavekin

#endif  // WAVEKIN_COLLISION_HPP_
