#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thinseq {

/// A point or parameter outside the domain of an operation (|z| >= 1, q >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The input does not behave like an interpolating sequence: a zero or
/// underflowing separation product, or a Gram window too close to singular.
class NonInterpolatingError : public std::runtime_error {
 public:
  NonInterpolatingError(const std::string& what, double lambda_min = 0.0)
      : std::runtime_error(what), lambda_min_(lambda_min) {}
  double lambda_min() const noexcept { return lambda_min_; }

 private:
  double lambda_min_;
};

class EigenNonConvergence : public std::runtime_error {
 public:
  EigenNonConvergence(const std::string& what, double best, double residual)
      : std::runtime_error(what), best_(best), residual_(residual) {}
  double best_estimate() const noexcept { return best_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_;
  double residual_;
};

/// An approximate solver handed to the iterative scheme broke its residual contract.
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class SolverNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleMeasure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace thinseq
