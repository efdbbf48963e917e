#pragma once
#include <stdexcept>
#include <string>

namespace gie {

// Raised when a Fock-space truncation certification fails: the probability mass
// parked in the top retained level exceeds the caller's leakage budget, so results
// computed on the truncated space can no longer be trusted.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input configuration violates the schema or a physical
// consistency rule. The message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an iterative numerical procedure fails to converge or produces a
// non-finite result.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gie
