#include "wavekin/grid.hpp"

#include <cmath>
#include <sstream>

#include "wavekin/errors.hpp"

namespace wavekin {

FrequencyGrid build_grid(double delta, int m, int cutoff_index) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ConfigError("grid.delta must be a positive finite real");
  }
  if (cutoff_index < 1) {
    throw ConfigError("grid.cutoff_index must be >= 1");
  }
  if (m < 2 * cutoff_index) {
    std::ostringstream os;
    os << "grid must contain [0, 2N]: require m >= 2*cutoff_index, got m=" << m
       << ", cutoff_index=" << cutoff_index;
    throw ConfigError(os.str());
  }
  return FrequencyGrid{delta, m, cutoff_index};
}

std::vector<double> tabulate_kernel(const InteractionKernel& kernel,
                                    const FrequencyGrid& grid) {
  std::vector<double> U(grid.size());
  for (int i = 0; i < grid.size(); ++i) U[i] = kernel.value(grid.omega(i));
  return U;
}

Spectrum project_initial(const FrequencyGrid& grid,
                         const std::function<double(double)>& f0, double a,
                         double b) {
  if (!(a > 0.0) || !(b > a)) {
    throw ConfigError("initial support must satisfy 0 < a < b");
  }
  if (b > grid.cutoff()) {
    std::ostringstream os;
    os << "initial support upper end b=" << b
       << " exceeds the cutoff N=" << grid.cutoff();
    throw ConfigError(os.str());
  }
  Spectrum f;
  f.values.assign(grid.size(), 0.0);
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.omega(i);
    if (w < a || w > b) continue;
    const double v = f0(w);
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream os;
      os << "initial datum is negative or non-finite at omega=" << w;
      throw InputError(os.str());
    }
    f.values[i] = v;
  }
  return f;
}

double moment(const Spectrum& f, const FrequencyGrid& grid, MomentWeight weight,
              const InteractionKernel& kernel) {
  if (static_cast<int>(f.values.size()) != grid.size()) {
    throw InputError("spectrum size does not match grid");
  }
  double sum = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.omega(i);
    double wt = 1.0;
    switch (weight) {
      case MomentWeight::Mass:
        wt = 1.0;
        break;
      case MomentWeight::Energy:
        wt = w * kernel.value(w);
        break;
      case MomentWeight::WeightedMass:
        wt = 1.0 + kernel.value(w);
        break;
    }
    sum += wt * f.values[i];
  }
  return sum * grid.delta;
}

double local_l1(const Spectrum& f, const FrequencyGrid& grid, double a,
                double b) {
  if (!(a < b)) throw InputError("local_l1 requires a < b");
  if (!(a > 0.0) || b > grid.omega_max()) {
    throw InputError("local_l1 window must satisfy 0 < a < b <= omega_max");
  }
  double sum = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.omega(i);
    if (w >= a && w <= b) sum += f.values[i];
  }
  return sum * grid.delta;
}

double mass_on_cutoff(const Spectrum& f, const FrequencyGrid& grid) {
  double sum = 0.0;
  for (int i = 0; i <= grid.cutoff_index; ++i) sum += f.values[i];
  return sum * grid.delta;
}

double tail_energy_fraction(const Spectrum& f, const FrequencyGrid& grid,
                            const InteractionKernel& kernel, double R) {
  if (!(R > 0.0) || !(R < grid.omega_max())) {
    throw InputError("tail_energy_fraction requires 0 < R < omega_max");
  }
  double total = 0.0;
  double tail = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.omega(i);
    const double term = w * kernel.value(w) * f.values[i];
    total += term;
    if (w > R) tail += term;
  }
  if (total <= 0.0) {
    throw InputError("tail_energy_fraction is undefined for zero total energy");
  }
  return tail / total;
}

}  // namespace wavekin
