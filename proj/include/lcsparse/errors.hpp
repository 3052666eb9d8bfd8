#pragma once

#include <stdexcept>
#include <string>

namespace lcsparse {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// A configured size or work cap would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ExponentOverflow : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class CapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed text, CSV or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A proved statement failed on concrete data. Always an implementation
/// defect; never a normal result.
class FatalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace lcsparse
