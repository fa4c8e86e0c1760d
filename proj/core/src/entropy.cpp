#include "wavekin/entropy.hpp"

#include <cmath>

#include "wavekin/errors.hpp"

namespace wavekin {

const EntropyDensity& quadratic_entropy() {
  static const EntropyDensity e{
      "quadratic", EntropyGrade::Superlinear,
      [](double r) { return r * r; },
      [](double r) { return 2.0 * r; }};
  return e;
}

const EntropyDensity& logtype_entropy() {
  static const EntropyDensity e{
      "logtype", EntropyGrade::Superlinear,
      [](double r) { return (1.0 + r) * std::log1p(r) - r; },
      [](double r) { return std::log1p(r); }};
  return e;
}

const EntropyDensity& linear_entropy() {
  static const EntropyDensity e{
      "linear", EntropyGrade::Convex,
      [](double r) { return r; },
      [](double) { return 1.0; }};
  return e;
}

const EntropyDensity& entropy_by_name(std::string_view name) {
  if (name == "quadratic") return quadratic_entropy();
  if (name == "logtype") return logtype_entropy();
  if (name == "linear") return linear_entropy();
  throw ConfigError("unknown entropy density '" + std::string(name) +
                    "' (expected quadratic, logtype or linear)");
}

double entropy_value(const Spectrum& f, const InteractionKernel& kernel,
                     const EntropyDensity& e, const FrequencyGrid& grid) {
  if (static_cast<int>(f.values.size()) != grid.size()) {
    throw InputError("spectrum size does not match grid");
  }
  // Node 0 contributes the continuity limit e'(0) * f_0; U > 0 on (0, N]
  // for admissible kernels, so the interior terms are well defined.
  double sum = e.e_prime(0.0) * f.values[0];
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  for (int i = 1; i <= grid.cutoff_index; ++i) {
    sum += e.e(U[i] * f.values[i]) / U[i];
  }
  return sum * grid.delta;
}

double dissipation_functional(const Spectrum& f,
                              const InteractionKernel& kernel,
                              const FrequencyGrid& grid) {
  if (static_cast<int>(f.values.size()) != grid.size()) {
    throw InputError("spectrum size does not match grid");
  }
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  double sum = 0.0;
  for (int i = 0; i <= grid.m; ++i) {
    if (f.values[i] == 0.0) continue;
    double inner = 0.0;
    for (int j = 0; j <= i; ++j) inner += U[j] * U[i - j] * f.values[j];
    sum += inner * f.values[i];
  }
  return sum * grid.delta * grid.delta;
}

double cutoff_dissipation(const Spectrum& f, const InteractionKernel& kernel,
                          const FrequencyGrid& grid, const EntropyDensity& e) {
  const std::vector<double> U = tabulate_kernel(kernel, grid);
  double sum = 0.0;
  for (int i = 0; i <= grid.cutoff_index; ++i) {
    if (f.values[i] == 0.0) continue;
    double inner = 0.0;
    for (int j = 0; j <= i; ++j) inner += U[j] * U[i - j] * f.values[j];
    sum += inner * f.values[i] * e.e_prime(U[i] * f.values[i]);
  }
  return sum * grid.delta * grid.delta;
}

DissipationBound cumulative_dissipation_check(const Trajectory& trajectory,
                                              const InteractionKernel& kernel,
                                              const EntropyDensity& e,
                                              const FrequencyGrid& grid) {
  if (trajectory.snapshots.empty()) {
    throw InputError("cumulative_dissipation_check requires a nonempty trajectory");
  }
  const bool trapezoid = trajectory.method == TimeMethod::Rk4;
  double integral = 0.0;
  double prev_value = 0.0;
  for (std::size_t k = 0; k + 1 < trajectory.snapshots.size(); ++k) {
    const auto& cur = trajectory.snapshots[k];
    const auto& nxt = trajectory.snapshots[k + 1];
    const double dt = nxt.time - cur.time;
    const double d_cur =
        (k == 0 || !trapezoid)
            ? cutoff_dissipation(cur.spectrum, kernel, grid, e)
            : prev_value;
    if (trapezoid) {
      const double d_nxt = cutoff_dissipation(nxt.spectrum, kernel, grid, e);
      integral += 0.5 * (d_cur + d_nxt) * dt;
      prev_value = d_nxt;
    } else {
      integral += d_cur * dt;
    }
  }
  DissipationBound bound;
  bound.lhs = 2.0 * integral;
  bound.rhs = entropy_value(trajectory.snapshots.front().spectrum, kernel, e,
                            grid);
  bound.holds = bound.lhs <= bound.rhs * (1.0 + 1e-6);
  return bound;
}

}  // namespace wavekin
