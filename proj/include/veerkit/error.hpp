#pragma once

#include <stdexcept>
#include <string>

namespace veerkit {

// Malformed or out-of-contract input: bad tokens, index overflow, invalid
// family parameters, mismatched strand counts.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A search hit its configured step limit before finishing.
class BudgetExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. Riemann-Hurwitz yields a non-integral
// genus). Signals a convention bug, never bad user input.
class InconsistentState : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace veerkit
