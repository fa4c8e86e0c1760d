#include "wavekin/kernel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wavekin/errors.hpp"

namespace wavekin {

namespace {

// Integer power by repeated multiplication, exact for small exponents.
double ipow(double x, int e) {
  if (e < 0) return 1.0 / ipow(x, -e);
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

double InteractionKernel::value(double omega) const {
  if (omega == 0.0) return 0.0;
  switch (family) {
    case KernelFamily::AcousticPower:
      return ipow(omega, d - 1);
    case KernelFamily::RegularizedPowerLaw:
      return std::pow(omega, rho) * std::pow(1.0 + omega, -beta);
  }
  return 0.0;
}

std::string InteractionKernel::describe() const {
  std::ostringstream os;
  if (family == KernelFamily::AcousticPower) {
    os << "acoustic(d=" << d << ")";
  } else {
    os << "regularized(rho=" << rho << ", beta=" << beta << ")";
  }
  return os.str();
}

double evaluate(const InteractionKernel& kernel, double omega) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw InputError("kernel evaluation requires a finite omega >= 0");
  }
  return kernel.value(omega);
}

KernelValidation validate_params(const InteractionKernel& kernel) {
  KernelValidation report;
  auto fail = [&report](const std::string& cond) {
    report.admissible = false;
    report.violated_conditions.push_back(cond);
  };
  if (kernel.family == KernelFamily::AcousticPower) {
    if (kernel.d < 2) fail("d >= 2");
  } else {
    if (!std::isfinite(kernel.rho) || kernel.rho < 1.0) fail("rho >= 1");
    if (!std::isfinite(kernel.beta) || kernel.beta > kernel.rho - 1.0)
      fail("beta <= rho - 1");
    if (!(kernel.rho - kernel.beta < 2.0)) fail("rho - beta < 2");
  }
  return report;
}

KernelCertificate check_superadditivity(const InteractionKernel& kernel,
                                        double x_max, int samples_per_axis) {
  if (!(x_max > 0.0) || samples_per_axis < 2) {
    throw InputError("check_superadditivity requires x_max > 0 and samples >= 2");
  }
  KernelCertificate cert;
  cert.atol = 1e-12 * kernel.value(2.0 * x_max);
  cert.worst_margin = std::numeric_limits<double>::infinity();
  const int s = samples_per_axis;
  for (int ix = 0; ix < s; ++ix) {
    const double x = x_max * ix / (s - 1);
    for (int iy = 0; iy <= ix; ++iy) {
      const double y = x_max * iy / (s - 1);
      const double margin =
          kernel.value(x + y) - kernel.value(y) - kernel.value(x - y);
      if (margin < cert.worst_margin) {
        cert.worst_margin = margin;
        cert.witness = std::make_pair(x, y);
      }
    }
  }
  cert.holds = cert.worst_margin >= -cert.atol;
  if (cert.holds) cert.witness.reset();
  return cert;
}

KernelCertificate check_monotonicity(const InteractionKernel& kernel,
                                     double x_max, int samples) {
  if (!(x_max > 0.0) || samples < 2) {
    throw InputError("check_monotonicity requires x_max > 0 and samples >= 2");
  }
  KernelCertificate cert;
  cert.atol = 1e-12 * kernel.value(x_max);
  cert.worst_margin = std::numeric_limits<double>::infinity();
  const int s = samples;
  for (int k = 0; k + 1 < s; ++k) {
    const double x0 = x_max * k / (s - 1);
    const double x1 = x_max * (k + 1) / (s - 1);
    const double diff = kernel.value(x1) - kernel.value(x0);
    if (diff < cert.worst_margin) {
      cert.worst_margin = diff;
      cert.witness = std::make_pair(x0, x1);
    }
  }
  cert.holds = cert.worst_margin >= -cert.atol;
  if (cert.holds) cert.witness.reset();
  return cert;
}

}  // namespace wavekin
