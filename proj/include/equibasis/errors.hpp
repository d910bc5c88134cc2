#pragma once

#include <stdexcept>
#include <string>

namespace equibasis {

/// A caller violated a documented precondition (index range, parameter domain, parity).
class contract_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operand shapes are incompatible.
class shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input contained NaN/Inf or a computation left the finite range.
class numeric_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested object would exceed the configured memory cap.
class resource_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw contract_error(message);
}

}  // namespace detail
}  // namespace equibasis
