#ifndef HDPS_ERRORS_HPP_
#define HDPS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hdps {

// Invalid specs, malformed configs, bad CLI input. Mapped to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Threshold window empty or configuration outside the admissible regime.
// Also mapped to exit code 2.
class RegimeError : public std::runtime_error {
 public:
  explicit RegimeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Singular Gram blocks, asymmetric inputs to symmetric solvers, etc.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hdps

#endif  // HDPS_ERRORS_HPP_
