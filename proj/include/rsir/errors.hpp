#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsir {

/// State outside the admissible region of an equation of state.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Riemann fan whose wave speeds collapse (S_L = S_R or a vanishing contact denominator).
class DegenerateFanError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reconstructed or averaged state with non-positive mass, out-of-range volume fraction,
/// or inadmissible thermodynamics.
class PositivityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wrong thermodynamic closure for a solver (e.g. covolume EOS given to the SG-only RSIR).
class ClosureError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class VacuumError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

class RelaxationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Hyperbolic step failure at a given cell.
class StepError : public std::runtime_error {
public:
  StepError(const std::string& what, std::size_t cell)
      : std::runtime_error(what + " at cell " + std::to_string(cell)), cell_(cell) {}
  std::size_t cell() const noexcept { return cell_; }

  /// Same failure with `context` prepended to the message.
  static StepError with_context(const StepError& inner, const std::string& context) {
    return StepError(context + ": " + inner.what(), inner.cell(), 0);
  }

private:
  StepError(const std::string& full, std::size_t cell, int)
      : std::runtime_error(full), cell_(cell) {}
  std::size_t cell_;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsir
