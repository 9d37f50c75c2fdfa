#pragma once

#include <stdexcept>
#include <string>

namespace rescue {

/// Raised when an input violates a documented range or structural invariant.
/// `field()` names the offending input (e.g. "probabilities[2]", "factor").
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Problem size exceeds what an exhaustive method will enumerate.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Integration dimension exceeds the nested quadrature limit; callers should
/// fall back to simulation.
class DimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rescue
