#pragma once

#include <stdexcept>
#include <string>

namespace irreducia {

// Invalid input or violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound (factorization, oracle degree/coefficients,
// enumeration budget) was exceeded. Callers may skip the item and continue.
class LimitError : public Error {
 public:
  using Error::Error;
};

// Numeric root finder failed to converge within its retry budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : Error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace irreducia
