#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different rings, meshes or coefficient spaces.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// An operation needs division by integers but the base ring is Z.
class DivisionError : public Error {
 public:
  using Error::Error;
};

// Input violates the documented precondition of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Computation would exceed a configured resource bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed text, JSON or TOML input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cobord
