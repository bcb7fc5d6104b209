#pragma once

#include <stdexcept>
#include <string>

namespace rtfcheck {

// Base class for every error the library raises. Callers that only need a
// pass/fail split can catch this; the CLI maps it to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (out-of-range index, size
// mismatch, malformed text).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured size cap (tensor rank, shape degree, census field size) was
// exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Zeta data or a double cover failed validation.
class InvalidZeta : public Error {
 public:
  using Error::Error;
};

// The I_r side has no stalk model at divisors with repeated points.
class MultiplicityUnsupported : public Error {
 public:
  using Error::Error;
};

// Tr(alpha * conj(beta)) vanished; the invariant is undefined.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. This indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rtfcheck
