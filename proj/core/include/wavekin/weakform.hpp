#ifndef WAVEKIN_WEAKFORM_HPP_
#define WAVEKIN_WEAKFORM_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wavekin/grid.hpp"
#include "wavekin/kernel.hpp"
#include "wavekin/trajectory.hpp"

namespace wavekin {

/// Compactly supported C^2 test function on (0, omega_max). The built-in
/// family is the polynomial bump (1 - s^2)^3 with s = (2w-a-b)/(b-a) on
/// [a, b]; user tabulations are accepted with declared support and
/// evaluated by linear interpolation between nodes.
class TestFunction {
 public:
  static TestFunction bump(const FrequencyGrid& grid, double a, double b);
  static TestFunction tabulated(const FrequencyGrid& grid,
                                std::vector<double> values, double a, double b,
                                std::string id = "tabulated");

  double operator()(double omega) const;  // exactly 0 outside [a, b]
  double support_lower() const { return a_; }
  double support_upper() const { return b_; }
  const std::string& id() const { return id_; }
  const std::vector<double>& node_values() const { return node_values_; }

 private:
  TestFunction() = default;
  bool is_bump_ = false;
  double a_ = 0.0, b_ = 0.0;
  double delta_ = 0.0;
  std::vector<double> node_values_;
  std::string id_;
};

/// H_phi(x, y) = (x+y)phi(x+y) + (x-y)phi(x-y) - 2x phi(x) - 2y phi(y)
/// for x > y > 0 (the Case A weak-form kernel).
double kernel_H(const TestFunction& phi, double x, double y);

/// The regularized-family kernel with F(z) = z^rho (1+z)^(-beta):
///   F(x+y)phi(x+y) + F(x-y)phi(x-y)
///   - (F(x-y) + F(x+y)) phi(x) + (F(x-y) - F(x+y)) phi(y),
/// for x > y > 0. Requires admissible (rho, beta); reduces to kernel_H
/// when rho = 1, beta = 0.
double kernel_Hcal(const TestFunction& phi, double x, double y, double rho,
                   double beta);

/// Residual of the discrete weak identity along a trajectory:
///   r(t) = sum_i g_i(t) phi_i delta - sum_i g_i(0) phi_i delta
///          - 2 * int_0^t sum_{i>j>=1} g_i g_j K(omega_i, omega_j) delta^2 ds
/// with g_i = U_i f_i X(i<=n), K built from the kernel variant, and the
/// time integral taken by trapezoid over the stored snapshots. Returns the
/// series (t_k, r(t_k)) over the snapshots.
std::vector<std::pair<double, double>> weak_residual(
    const Trajectory& trajectory, const TestFunction& phi,
    const InteractionKernel& kernel, const FrequencyGrid& grid);

}  // namespace wavekin

#endif  // WAVEKIN_WEAKFORM_HPP_
