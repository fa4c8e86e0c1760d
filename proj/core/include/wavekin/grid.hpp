#ifndef WAVEKIN_GRID_HPP_
#define WAVEKIN_GRID_HPP_

#include <functional>
#include <vector>

#include "wavekin/kernel.hpp"

namespace wavekin {

/// Uniform frequency lattice omega_i = i*delta, i = 0..m, with the cutoff
/// N = cutoff_index * delta sitting exactly on a node. The domain must
/// contain [0, 2N], i.e. m >= 2*cutoff_index, so the evolved support
/// never leaves the grid.
struct FrequencyGrid {
  double delta = 0.0;
  int m = 0;             // number of intervals; nodes are 0..m
  int cutoff_index = 0;  // n; the cutoff frequency is N = n*delta

  int size() const { return m + 1; }
  double omega(int i) const { return delta * i; }
  double cutoff() const { return delta * cutoff_index; }     // N
  double omega_max() const { return delta * m; }

  bool operator==(const FrequencyGrid&) const = default;
};

FrequencyGrid build_grid(double delta, int m, int cutoff_index);

/// Nonnegative density snapshot on a grid (values per node, in units of
/// density in omega). Value-semantic; tied to the grid it was built on.
struct Spectrum {
  std::vector<double> values;
  double time = 0.0;
};

/// Tabulates U at every node. Helper shared by the quadrature functionals
/// and the collision module.
std::vector<double> tabulate_kernel(const InteractionKernel& kernel,
                                    const FrequencyGrid& grid);

/// Samples f0 at the nodes inside [a, b] (zero elsewhere). Requires
/// 0 < a < b <= N so the cutoff projection leaves the data untouched.
Spectrum project_initial(const FrequencyGrid& grid,
                         const std::function<double(double)>& f0,
                         double a, double b);

enum class MomentWeight { Mass, Energy, WeightedMass };

/// Rectangle-rule functional sum_i w(omega_i) f_i delta with
/// w in {1, omega*U, 1+U}; the node-0 term is included.
double moment(const Spectrum& f, const FrequencyGrid& grid, MomentWeight weight,
              const InteractionKernel& kernel);

/// sum over nodes with omega_i in [a, b] of f_i * delta; requires
/// 0 < a < b <= omega_max.
double local_l1(const Spectrum& f, const FrequencyGrid& grid, double a,
                double b);

/// Mass restricted to the cutoff region: sum_{i<=n} f_i * delta.
double mass_on_cutoff(const Spectrum& f, const FrequencyGrid& grid);

/// Fraction of the energy integral carried by nodes with omega_i > R.
/// Requires 0 < R < omega_max and a positive total energy.
double tail_energy_fraction(const Spectrum& f, const FrequencyGrid& grid,
                            const InteractionKernel& kernel, double R);

}  // namespace wavekin

#endif  // WAVEKIN_GRID_HPP_
