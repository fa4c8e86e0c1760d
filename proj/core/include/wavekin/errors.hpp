#ifndef WAVEKIN_ERRORS_HPP_
#define WAVEKIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wavekin {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration (grid rules, kernel admissibility, bad keys).
/// Maps to process exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid numeric input to an operation (negative density, NaN frequency).
/// Maps to process exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical contract was violated at run time (e.g. positivity undershoot
/// beyond the clamp window). Maps to process exit code 3.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Filesystem / parse failures on external files. Maps to exit code 4.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wavekin

#endif  // WAVEKIN_ERRORS_HPP_
