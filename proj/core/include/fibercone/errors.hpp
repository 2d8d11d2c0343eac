#pragma once

#include <stdexcept>
#include <string>

namespace fibercone {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (ring, ideal expression, poset file, corpus).
struct ParseError : Error {
  using Error::Error;
};

// A precondition on the arguments does not hold (wrong ring, wrong count,
// non-monomial leaf, zero divisor, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// The quotient is not finite dimensional (no pure power of some variable,
// degreewise pieces never fill up).
struct NotArtinian : Error {
  using Error::Error;
};

// A configured budget (cell count, power ladder, grid size) was exhausted
// before the computation could finish.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A sample was consumed without the stabilization policy being met.
struct NotStabilized : Error {
  using Error::Error;
};

// The candidate ideal is not a reduction within the power budget.
struct NotAReduction : Error {
  using Error::Error;
};

// J is not contained in I.
struct NotContained : Error {
  using Error::Error;
};

// J is a reduction but fails the minimal-reduction criterion mu(J) = a(I).
struct NotMinimalReduction : Error {
  using Error::Error;
};

struct NotJointReduction : Error {
  using Error::Error;
};

struct NotParameterSystem : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

// Two routes that a theorem forces to agree disagreed. This is an
// implementation bug, never a property of the input; callers abort with a
// distinguished exit code.
struct Falsification : Error {
  using Error::Error;
};

}  // namespace fibercone
