#ifndef WAVEKIN_KERNEL_HPP_
#define WAVEKIN_KERNEL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavekin {

enum class KernelFamily {
  AcousticPower,       // U(w) = w^(d-1)
  RegularizedPowerLaw  // U(w) = w^rho * (1+w)^(-beta)
};

/// Interaction weight U. Immutable value type; safe for concurrent reads.
/// The multiplicative constant is fixed to 1.
struct InteractionKernel {
  KernelFamily family = KernelFamily::AcousticPower;
  int d = 2;           // AcousticPower only
  double rho = 1.0;    // RegularizedPowerLaw only
  double beta = 0.0;   // RegularizedPowerLaw only

  static InteractionKernel acoustic(int d) {
    return InteractionKernel{KernelFamily::AcousticPower, d, 0.0, 0.0};
  }
  static InteractionKernel regularized(double rho, double beta) {
    return InteractionKernel{KernelFamily::RegularizedPowerLaw, 0, rho, beta};
  }

  /// Unchecked evaluation; returns exactly 0 at omega = 0 for every variant.
  double value(double omega) const;

  std::string describe() const;
};

/// Checked evaluation: rejects negative or non-finite omega.
double evaluate(const InteractionKernel& kernel, double omega);

struct KernelValidation {
  bool admissible = true;
  std::vector<std::string> violated_conditions;
};

/// Checks the parameter inequalities the entropy theory requires:
/// d >= 2 for the acoustic family; rho >= 1, beta <= rho-1, rho-beta < 2
/// for the regularized family. Report-based, never throws.
KernelValidation validate_params(const InteractionKernel& kernel);

struct KernelCertificate {
  bool holds = false;
  double worst_margin = 0.0;
  std::optional<std::pair<double, double>> witness;  // minimizing (x, y)
  double atol = 0.0;
};

/// Scans the lattice {0 <= y <= x <= x_max}, x_k = k*x_max/(samples-1), for
/// the margin U(x+y) - U(y) - U(x-y). holds iff the minimum margin is
/// >= -atol with atol = 1e-12 * U(2*x_max). The witness is the minimizing
/// pair when the certificate fails.
KernelCertificate check_superadditivity(const InteractionKernel& kernel,
                                        double x_max, int samples_per_axis);

/// Scans consecutive lattice pairs on [0, x_max] for U(x_{k+1}) - U(x_k);
/// holds iff the minimum difference is >= -atol with atol = 1e-12 * U(x_max).
KernelCertificate check_monotonicity(const InteractionKernel& kernel,
                                     double x_max, int samples);

}  // namespace wavekin

#endif  // WAVEKIN_KERNEL_HPP_
