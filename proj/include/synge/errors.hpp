#ifndef SYNGE_ERRORS_HPP
#define SYNGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace synge {

/// Argument outside the mathematical domain of an operation (gamma <= 0, |u| >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure (quadrature, Newton, bisection, ODE) failed to reach its target.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Flow solver failure: singular denominator, step underflow, missing bracket.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace synge

#endif  // SYNGE_ERRORS_HPP
