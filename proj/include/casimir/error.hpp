#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Invalid argument or parameter outside the mathematical domain of an
// operation (negative conductivity, node outside [0,1], |z| > 1 for Li4, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Adaptive quadrature ran out of subdivisions. Carries the best estimate so
// callers can decide whether it is usable.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}

  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

// A numerical invariant broke during an energy evaluation: Delta <= 0 at a
// node, a root inside the unit disk, a non-vanishing imaginary part, ...
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
