#pragma once

#include <stdexcept>
#include <string>

namespace shoreline {

// Base of every error the library throws on bad input or failed construction.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that cannot be parsed or violates a type invariant.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// Two vertices share a function value where distinct values are required.
class GenericityError : public Error {
 public:
  using Error::Error;
};

// A generator or PL construction produced something that fails its own checks.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The caller asked for an operation whose preconditions do not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace shoreline
