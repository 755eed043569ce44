#pragma once

#include <stdexcept>
#include <string>

namespace dcsim {

// Base class for everything thrown by this library. CLI maps UsageError to
// exit code 2 and every other Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A spectrum does not cover the band an operation needs.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

// A distribution's tails reach the edge of the computed window.
class WindowOverflow : public Error {
 public:
  using Error::Error;
};

class InsufficientSampling : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dcsim
