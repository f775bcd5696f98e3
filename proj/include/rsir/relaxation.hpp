#pragma once

#include "rsir/twophase.hpp"

namespace rsir {

struct RelaxReport {
  double p_eq = 0.0;
  int iterations = 0;
  /// |p1 - p2| / max(|p1|, |p2|) after relaxation.
  double residual = 0.0;
  /// |E_mix' - E_mix| / |E_mix|
  double conservation_defect = 0.0;
};

struct RelaxResult {
  TwoPhaseCons state{};
  RelaxReport report{};
};

/// Instantaneous pressure equilibration. Phase masses and momenta are left untouched;
/// phase internal energies change by the work -p_eq (v' - v) of the equilibrium
/// pressure. Throws RelaxationError when no admissible equilibrium exists.
RelaxResult pressure_relax_stiff(const TwoPhaseCons& u, const TwoPhaseEos& eos);

/// Residual sum_k alpha_k'(p) - 1 of the saturation constraint; strictly decreasing in p
/// above -min(p_inf).
double saturation_residual(const TwoPhaseCons& u, const TwoPhaseEos& eos, double p);

/// Exact integration of du1/dt = lambda (u2 - u1) / m1 with the opposite force on
/// phase 2. The dissipated kinetic energy heats phase 2.
TwoPhaseCons velocity_relax(const TwoPhaseCons& u, double lambda, double dt);

double clift_gauvin_cd(double reynolds);

/// Drag force on phase 1 per unit volume: 3 alpha1 Cd rho2 |u2 - u1| (u2 - u1) / (8 R).
double clift_gauvin_force(const TwoPhasePrim& w, double radius, double mu2);

/// Clift-Gauvin drag over dt, sub-cycled with the drag coefficient frozen on each
/// sub-step and integrated exponentially.
TwoPhaseCons drag_clift_gauvin(const TwoPhaseCons& u, const TwoPhaseEos& eos, double radius,
                               double mu2, double dt);

}  // namespace rsir
