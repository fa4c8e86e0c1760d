#ifndef WAVEKIN_VERIFY_HPP_
#define WAVEKIN_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wavekin/kernel.hpp"

namespace wavekin {

struct PropertyVerdict {
  std::string name;
  bool pass = false;
  bool applicable = true;  // false for e.g. superadditivity of an
                           // inadmissible kernel (reported, not gating)
  double margin = 0.0;     // measured worst value against the bound
  std::string detail;
};

struct VerifyReport {
  std::vector<PropertyVerdict> verdicts;
  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (v.applicable && !v.pass) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  int grid_size = 64;  // lattice intervals m for the operator properties
  std::optional<InteractionKernel> kernel_override;
};

/// Small-scale property battery: oracle equivalence, exact energy
/// conservation, entropy-production sign, the Lipschitz estimate, the
/// kernel certificates and weak-residual refinement. Failures are verdicts
/// with measured margins, never exceptions.
VerifyReport verify_properties(const VerifyOptions& options = {});

}  // namespace wavekin

#endif  // WAVEKIN_VERIFY_HPP_
