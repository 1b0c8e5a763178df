#ifndef HRLB_ERROR_HPP
#define HRLB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hrlb {

// Caller passed an argument outside the operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates the operation's precondition
// (e.g. asking for a witness on a k-partite graph).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search exhausted its node budget before finishing.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized construction failed to reach its guaranteed size within the retry cap.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internally asserted postcondition did not hold. Always a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

}  // namespace hrlb

#endif  // HRLB_ERROR_HPP
