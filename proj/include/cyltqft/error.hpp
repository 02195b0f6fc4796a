#ifndef CYLTQFT_ERROR_HPP_
#define CYLTQFT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cyltqft {

// Malformed or mismatched input: shapes that do not fit, non-total tables,
// unparseable tokens. The CLI maps these to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A local field theory broke one of the axioms a construction relies on,
// e.g. a gluing map that is not a bijection onto its equalizer.
class TheoryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyltqft

#endif  // CYLTQFT_ERROR_HPP_
