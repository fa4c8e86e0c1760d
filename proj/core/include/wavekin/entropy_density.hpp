#ifndef WAVEKIN_ENTROPY_DENSITY_HPP_
#define WAVEKIN_ENTROPY_DENSITY_HPP_

#include <functional>
#include <string>
#include <string_view>

namespace wavekin {

/// Superlinear densities are smooth with e(0)=0, e'(0)=0 and e(r)/r
/// unbounded; the convex class only needs convexity, e(0)=0, e>=0, C1.
enum class EntropyGrade { Superlinear, Convex };

struct EntropyDensity {
  std::string name;
  EntropyGrade grade = EntropyGrade::Convex;
  std::function<double(double)> e;
  std::function<double(double)> e_prime;
};

/// e(r) = r^2 (superlinear).
const EntropyDensity& quadratic_entropy();
/// e(r) = (1+r)ln(1+r) - r (superlinear).
const EntropyDensity& logtype_entropy();
/// e(r) = r (convex class; the entropy functional reduces to the mass).
const EntropyDensity& linear_entropy();

/// Lookup by configuration name in {quadratic, logtype, linear};
/// throws ConfigError for anything else.
const EntropyDensity& entropy_by_name(std::string_view name);

}  // namespace wavekin

#endif  // WAVEKIN_ENTROPY_DENSITY_HPP_
