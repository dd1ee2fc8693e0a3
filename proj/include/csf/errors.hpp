#pragma once

#include <stdexcept>
#include <string>

namespace csf {

/// Invalid arguments, broken preconditions, malformed configuration.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// File and format problems (missing files, bad magic, truncated payloads).
/// The CLI maps this to exit code 3.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an iterative solver detects divergence; the message names
/// the step size that caused it.
class InstabilityError : public std::runtime_error {
public:
  explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace csf
