#pragma once

// Error taxonomy for the lucanon library.  Every failure surfaces as a typed
// exception so callers (and the CLI) can map causes to exit codes without
// string matching.

#include <stdexcept>
#include <string>

namespace lucanon {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Amplitude count or operand shape does not match the declared dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// All amplitudes are numerically zero; the object cannot represent a state.
class ZeroState : public Error {
 public:
  using Error::Error;
};

// A mode index lies outside 0..N-1.
class ModeOutOfRange : public Error {
 public:
  using Error::Error;
};

// A matrix has the wrong shape for the requested operation.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// An index along a mode lies outside its dimension.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A per-mode argument list has the wrong length.
class WrongCount : public Error {
 public:
  using Error::Error;
};

// A value sequence required to be descending is not.
class NotSorted : public Error {
 public:
  using Error::Error;
};

// A documented caller obligation was violated.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// An iterative kernel exceeded its documented iteration bound.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// A file could not be parsed; the message carries field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A problem exceeds the size limit of a brute-force-only routine.
class SizeGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace lucanon
