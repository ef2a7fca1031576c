#pragma once

#include <stdexcept>
#include <string>

namespace obstruct {

/// An argument is outside the mathematical domain of an operation
/// (non-prime modulus, trivial torus knot, indefinite matrix, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A value does not fit the supported integer width.
class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// A bounded search gave up before finding an answer that is known to exist.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (Gram files, graph files, knot specs).
class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

} // namespace obstruct
