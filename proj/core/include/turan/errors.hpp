#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Malformed or out-of-contract input (bad family description, bad parameter).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient query failed: index beyond table capacity or a positivity
/// constraint of the recurrence form does not hold at `index`.
class CoefficientError : public std::out_of_range {
 public:
  CoefficientError(const std::string& what, int index)
      : std::out_of_range(what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Raised when a quantity normalized by p_k(x) is requested at a zero of p_k.
class ZeroOfPolynomialError : public std::domain_error {
 public:
  ZeroOfPolynomialError(int degree, double x);
  int degree() const noexcept { return degree_; }
  double x() const noexcept { return x_; }

 private:
  int degree_;
  double x_;
};

/// Numerical failure of a solver (bracket lost, no root where one must exist).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turan
