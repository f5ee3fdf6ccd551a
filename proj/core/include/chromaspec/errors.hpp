#pragma once

#include <stdexcept>
#include <string>

namespace chromaspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated: malformed text, a missing
/// edge, mixed radicands, a degenerate evaluation point.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded (enumeration limits, canonical-form
/// limits, brute-force budgets).
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A mathematical check that must hold did not: a certificate failed, two
/// words collided, an identity was violated.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace chromaspec
