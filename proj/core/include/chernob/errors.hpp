#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chernob {

// Input that violates a documented precondition (bad shapes, bad files,
// bad flag values). CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax or semantic error while parsing a polynomial / 1-form string.
// `position` is a 0-based offset into the input text.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A computation could not be certified. CLI maps these to exit code 2
// (or a FAIL verdict inside `check`).
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

// The pair queue or reduction-step budget of the standard-basis engine
// was exhausted. Raised instead of emitting an uncertified result.
class ResourceLimitError : public ComputationError {
 public:
  explicit ResourceLimitError(const std::string& what) : ComputationError(what) {}
};

// The special scheme is not isolated at the origin (infinite colength).
class NonIsolatedSchemeError : public ComputationError {
 public:
  NonIsolatedSchemeError()
      : ComputationError(
            "non-isolated special scheme; exact Chern computation unavailable") {}
};

// The generic-linear baseline could not be certified within the resample
// budget. Carries every colength observed across the draws.
class GenericityError : public ComputationError {
 public:
  GenericityError(const std::string& what, std::vector<std::string> observed)
      : ComputationError(what), observed_(std::move(observed)) {}
  const std::vector<std::string>& observed_values() const { return observed_; }

 private:
  std::vector<std::string> observed_;
};

// The numeric oracle produced counts that disagree across deformations,
// or two accepted points sit suspiciously close together.
class OracleError : public ComputationError {
 public:
  explicit OracleError(const std::string& what) : ComputationError(what) {}
};

}  // namespace chernob
