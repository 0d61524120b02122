#ifndef DIAGMON_ERRORS_HPP_
#define DIAGMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace diagmon {

  // Operands of incompatible degree (or element kind).
  class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Malformed input: overlapping blocks, uncovered vertices, a semilattice
  // that is not closed, an unknown family name, ...
  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A configured size cap was exceeded.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An operation was called on an object that lacks a required structure,
  // e.g. x -> x^+ on a semigroup where some tilde class has no unique
  // representative.
  class StateError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace diagmon

#endif  // DIAGMON_ERRORS_HPP_
