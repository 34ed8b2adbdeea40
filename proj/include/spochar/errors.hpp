#pragma once

#include <stdexcept>
#include <string>

namespace spochar {

// Bad user input: malformed weight strings, non-dominant weights where a
// dominant one is required, hook-condition violations and so on.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical assertion failed inside a computation.  These indicate a
// bug in a formula or its implementation, never bad input.
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public MathError {
public:
  NotDivisible() : MathError("exact division failed: nonzero remainder") {}
  explicit NotDivisible(const std::string &what) : MathError(what) {}
};

class DimensionMismatch : public InvalidInput {
public:
  DimensionMismatch() : InvalidInput("lattice dimension mismatch") {}
};

} // namespace spochar
