#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace torsion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range index, bad shape, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (Weyl rank, sample budget) would be exceeded.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold exactly was found to fail. Always a bug.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to reach its tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Configuration file could not be parsed or failed validation.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace torsion
