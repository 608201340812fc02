#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values from different carriers were combined.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial, expression, element literal, or table file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside an operation's domain (inverse of zero,
/// zero scalar, non-monic input where monic is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (degree cap, enumeration budget) was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperpoly
