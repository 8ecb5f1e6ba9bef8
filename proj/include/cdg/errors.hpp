#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class PatternTooLong : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedRankMatrix : public Error {
 public:
  using Error::Error;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

class NotLowerOutsideCorner : public Error {
 public:
  using Error::Error;
};

class YDegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class NotGroebner : public Error {
 public:
  using Error::Error;
};

/// Raised when a Gröbner computation runs out of its reduction-step budget.
/// `steps` is the number of reduction steps spent, `progress` counts the
/// pairs fully processed before the budget ran out.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t steps, std::size_t progress)
      : Error(what), steps_(steps), progress_(progress) {}

  std::size_t steps() const noexcept { return steps_; }
  std::size_t progress() const noexcept { return progress_; }

 private:
  std::size_t steps_;
  std::size_t progress_;
};

}  // namespace cdg
