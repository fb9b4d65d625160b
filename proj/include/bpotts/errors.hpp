#pragma once

#include <stdexcept>
#include <string>

namespace bpotts {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two scalars from different quadratic extensions were combined.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Invalid model parameters (C = 0, f = 0, kT <= 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Structural problem with a boundary graph or a spin state.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Generator / letter index outside the strand range, or strand-count mismatch.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A computation refused to start because it would exceed its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bpotts
