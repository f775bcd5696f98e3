#pragma once

#include <span>

#include "rsir/eos.hpp"
#include "rsir/euler.hpp"
#include "rsir/mesh.hpp"

namespace rsir {

enum class WaveKind { shock, rarefaction };

/// Exact solution of the Euler Riemann problem for ideal, stiffened and Noble-Abel
/// stiffened gases. The covolume case reuses the stiffened-gas relations written in the
/// shifted specific volume 1/rho - b.
class ExactSolution {
public:
  ExactSolution(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  double rho_star_l() const { return rho_star_l_; }
  double rho_star_r() const { return rho_star_r_; }
  WaveKind left_wave() const { return left_wave_; }
  WaveKind right_wave() const { return right_wave_; }
  int iterations() const { return iterations_; }
  /// |f_L(p*) + f_R(p*) + u_R - u_L| / (c_L + c_R)
  double residual() const { return residual_; }

  const EulerPrim& left() const { return wl_; }
  const EulerPrim& right() const { return wr_; }
  const EosParams& eos() const { return eos_; }

  /// State at similarity coordinate xi = x/t.
  EulerPrim sample(double xi) const;

  /// Outer speeds of the left and right waves (shock speed or rarefaction head).
  double left_head_speed() const;
  double right_head_speed() const;
  /// Inner speeds bounding the star region (shock speed or rarefaction tail).
  double left_tail_speed() const;
  double right_tail_speed() const;

  /// Pressure function of one side and its derivative.
  double pressure_function(double p, bool left_side) const;
  double pressure_function_derivative(double p, bool left_side) const;

private:
  EulerPrim sample_side(double xi, bool left_side) const;

  EulerPrim wl_, wr_;
  EosParams eos_;
  double p_star_ = 0.0, u_star_ = 0.0, rho_star_l_ = 0.0, rho_star_r_ = 0.0;
  WaveKind left_wave_ = WaveKind::rarefaction, right_wave_ = WaveKind::rarefaction;
  int iterations_ = 0;
  double residual_ = 0.0;
};

/// Newton iteration on the pressure function started from the two-rarefaction estimate,
/// with bisection safeguard. Throws VacuumError or ConvergenceError.
ExactSolution solve_exact(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

EulerPrim sample(const ExactSolution& sol, double xi);

enum class EulerField { density, velocity, pressure, internal_energy };

double field_value(const EulerPrim& w, EulerField f, const EosParams& eos);

/// sum_i |q_i - q_exact((x_i - x_disc)/t)| * dx over the mesh cell centers.
double l1_error(std::span<const double> numerical, EulerField field, const ExactSolution& sol,
                double t, const Mesh1D& mesh, double x_disc);

}  // namespace rsir
