#pragma once

#include <stdexcept>
#include <string>

namespace patchideal {

// Operands live in different variable sets (different patch charts).
class chart_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is undefined on its input (zero polynomial, empty list, ...).
class degenerate_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold: a permutation is not a fixed
// point of the variety, a Bruhat relation fails, the origin is off the scheme.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent computations that must agree did not.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace patchideal
