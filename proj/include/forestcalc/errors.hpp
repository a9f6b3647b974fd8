#pragma once

#include <stdexcept>
#include <string>

namespace forestcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (tree grammar, coefficient files, polynomials).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A functional was queried beyond its truncation degree.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Laurent arithmetic produced a pole deeper than the series window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

/// Operands live in spaces of different dimension or different rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace forestcalc
