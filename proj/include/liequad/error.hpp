#ifndef LIEQUAD_ERROR_HPP
#define LIEQUAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liequad {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " entries, got " + std::to_string(got)) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t n)
      : Error("generator index " + std::to_string(index + 1) +
              " out of range 1.." + std::to_string(n)) {}
};

class ArithmeticOverflow : public Error {
 public:
  ArithmeticOverflow() : Error("64-bit integer overflow in form evaluation") {}
};

/// Raised when root enumeration exceeds its budget; usually the form is not
/// weakly positive.
class RootBudgetExceeded : public Error {
 public:
  explicit RootBudgetExceeded(std::size_t cap)
      : Error("positive root enumeration exceeded the budget of " +
              std::to_string(cap) + " roots") {}
};

class SequenceBudgetExceeded : public Error {
 public:
  explicit SequenceBudgetExceeded(std::size_t cap)
      : Error("root sequence enumeration exceeded the budget of " +
              std::to_string(cap) + " sequences") {}
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

/// A positive root with no one-step descent to another positive root.
/// Impossible for weakly positive forms.
class NoDescent : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace liequad

#endif  // LIEQUAD_ERROR_HPP
