#include "wavekin/weakform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

double bump_value(double omega, double a, double b) {
  const double s = (2.0 * omega - a - b) / (b - a);
  if (std::abs(s) >= 1.0) return 0.0;
  const double u = 1.0 - s * s;
  return u * u * u;
}

void check_support(const FrequencyGrid& grid, double a, double b) {
  if (!(a > 0.0) || !(b > a)) {
    throw ConfigError("test-function support must satisfy 0 < a < b");
  }
  if (!(b < grid.omega_max())) {
    std::ostringstream os;
    os << "test-function support [" << a << ", " << b
       << "] must lie strictly below omega_max=" << grid.omega_max();
    throw ConfigError(os.str());
  }
}

}  // namespace

TestFunction TestFunction::bump(const FrequencyGrid& grid, double a,
                                double b) {
  check_support(grid, a, b);
  TestFunction phi;
  phi.is_bump_ = true;
  phi.a_ = a;
  phi.b_ = b;
  phi.delta_ = grid.delta;
  phi.node_values_.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    phi.node_values_[i] = bump_value(grid.omega(i), a, b);
  }
  std::ostringstream os;
  os << "bump_" << a << "_" << b;
  phi.id_ = os.str();
  return phi;
}

TestFunction TestFunction::tabulated(const FrequencyGrid& grid,
                                     std::vector<double> values, double a,
                                     double b, std::string id) {
  check_support(grid, a, b);
  if (static_cast<int>(values.size()) != grid.size()) {
    throw ConfigError("tabulated test function must have one value per node");
  }
  for (int i = 0; i < grid.size(); ++i) {
    const double w = grid.omega(i);
    if ((w < a || w > b) && values[i] != 0.0) {
      throw ConfigError("tabulated test function must vanish outside support");
    }
  }
  TestFunction phi;
  phi.is_bump_ = false;
  phi.a_ = a;
  phi.b_ = b;
  phi.delta_ = grid.delta;
  phi.node_values_ = std::move(values);
  phi.id_ = std::move(id);
  return phi;
}

double TestFunction::operator()(double omega) const {
  if (omega < a_ || omega > b_) return 0.0;
  if (is_bump_) return bump_value(omega, a_, b_);
  const double x = omega / delta_;
  const int i = std::min(static_cast<int>(x),
                         static_cast<int>(node_values_.size()) - 2);
  const double frac = x - i;
  return node_values_[i] * (1.0 - frac) + node_values_[i + 1] * frac;
}

double kernel_H(const TestFunction& phi, double x, double y) {
  if (!(x > y) || !(y > 0.0)) {
    throw InputError("kernel_H requires x > y > 0");
  }
  return (x + y) * phi(x + y) + (x - y) * phi(x - y) - 2.0 * x * phi(x) -
         2.0 * y * phi(y);
}

double kernel_Hcal(const TestFunction& phi, double x, double y, double rho,
                   double beta) {
  if (!(x > y) || !(y > 0.0)) {
    throw InputError("kernel_Hcal requires x > y > 0");
  }
  const InteractionKernel F = InteractionKernel::regularized(rho, beta);
  const double Fp = F.value(x + y);
  const double Fm = F.value(x - y);
  return Fp * phi(x + y) + Fm * phi(x - y) - (Fm + Fp) * phi(x) +
         (Fm - Fp) * phi(y);
}

std::vector<std::pair<double, double>> weak_residual(
    const Trajectory& trajectory, const TestFunction& phi,
    const InteractionKernel& kernel, const FrequencyGrid& grid) {
  if (trajectory.snapshots.empty()) {
    throw InputError("weak_residual requires a nonempty trajectory");
  }
  if (!(phi.support_upper() < grid.omega_max())) {
    throw ConfigError("test-function support exceeds omega_max");
  }
  if (static_cast<int>(phi.node_values().size()) != grid.size()) {
    throw ConfigError("test function was tabulated on a different grid");
  }
  const int m = grid.m;
  const int n = grid.cutoff_index;
  const double delta = grid.delta;
  const std::vector<double> U = tabulate_kernel(kernel, grid);

  // The same four-term kernel serves both families: with F = U it equals
  // H_phi in Case A and the regularized kernel in Case B. Only pairs with
  // i, j <= n meet a nonzero g, and then i+j <= 2n <= m stays on the grid.
  std::vector<std::vector<double>> K(n + 1);
  for (int i = 2; i <= n; ++i) {
    K[i].assign(i, 0.0);
    const double x = grid.omega(i);
    for (int j = 1; j < i; ++j) {
      const double y = grid.omega(j);
      const double Fp = U[i + j];
      const double Fm = U[i - j];
      K[i][j] = Fp * phi(x + y) + Fm * phi(x - y) - (Fm + Fp) * phi(x) +
                (Fm - Fp) * phi(y);
    }
  }

  auto masked_g = [&](const Spectrum& f) {
    std::vector<double> g(m + 1, 0.0);
    for (int i = 0; i <= n; ++i) g[i] = U[i] * f.values[i];
    return g;
  };
  auto pairing = [&](const std::vector<double>& g) {
    double s = 0.0;
    for (int i = 0; i <= m; ++i) s += g[i] * phi.node_values()[i];
    return s * delta;
  };
  auto interaction = [&](const std::vector<double>& g) {
    double s = 0.0;
    for (int i = 2; i <= n; ++i) {
      if (g[i] == 0.0) continue;
      double row = 0.0;
      for (int j = 1; j < i; ++j) row += g[j] * K[i][j];
      s += g[i] * row;
    }
    return s * delta * delta;
  };

  std::vector<std::pair<double, double>> series;
  series.reserve(trajectory.snapshots.size());
  const std::vector<double> g0 = masked_g(trajectory.snapshots[0].spectrum);
  const double p0 = pairing(g0);
  double integral = 0.0;
  double prev_I = interaction(g0);
  double prev_t = trajectory.snapshots[0].time;
  series.emplace_back(prev_t, 0.0);
  for (std::size_t k = 1; k < trajectory.snapshots.size(); ++k) {
    const auto& snap = trajectory.snapshots[k];
    const std::vector<double> g = masked_g(snap.spectrum);
    const double cur_I = interaction(g);
    integral += 0.5 * (prev_I + cur_I) * (snap.time - prev_t);
    prev_I = cur_I;
    prev_t = snap.time;
    series.emplace_back(snap.time, pairing(g) - p0 - 2.0 * integral);
  }
  return series;
}

}  // namespace wavekin
