#pragma once

#include <stdexcept>
#include <string>

namespace drvkit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input failed a structural check (bad Cayley table, invalid homomorphism,
/// uncertified derivation, malformed coefficient).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different groups or coefficient rings, or have
/// incompatible dimensions.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace drvkit
