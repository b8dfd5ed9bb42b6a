#ifndef LPK_ERRORS_HPP
#define LPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text does not match the grammar.
struct ParseError : Error {
  using Error::Error;
};

// Formula or arrow term is illegal in the ambient system.
struct SystemViolation : Error {
  using Error::Error;
};

// Composition endpoints disagree, or a schema instance is ill-typed.
struct TypeError : Error {
  using Error::Error;
};

// A side condition of a primitive or derived constructor fails.
struct ProvisoViolation : Error {
  using Error::Error;
};

// A^x_y is not defined and a renaming needed it.
struct UndefinedSubstitution : Error {
  using Error::Error;
};

struct NotDiversified : Error {
  using Error::Error;
};

// An operation was called outside its stated precondition
// (non-variable-pure input, residual cut, wrong target shape, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Graph composition over mismatched middle profiles.
struct ProfileMismatch : Error {
  using Error::Error;
};

}  // namespace lpk

#endif
