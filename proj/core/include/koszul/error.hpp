#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unknown ids, schema violations, invalid complexes.
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematical hypothesis of an operation does not hold
// (non-uniform graph, non-pure complex, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace koszul
