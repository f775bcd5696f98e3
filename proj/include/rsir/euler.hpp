#pragma once

#include <string_view>

#include "rsir/eos.hpp"
#include "rsir/state.hpp"

namespace rsir {

struct EulerPrim {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

/// (rho, rho*u, rho*E)
using EulerCons = StateVec<3>;
/// (rho*u, rho*u^2 + p, (rho*E + p)*u)
using EulerFlux = StateVec<3>;

EulerCons cons_from_prim(const EulerPrim& w, const EosParams& eos);
EulerPrim prim_from_cons(const EulerCons& u, const EosParams& eos);
EulerFlux physical_flux(const EulerPrim& w, const EosParams& eos);

struct WaveSpeeds {
  double s_l = 0.0;
  double s_r = 0.0;
};

/// Signed Davis bounds: min(u - c) and max(u + c) over both states.
WaveSpeeds davis_wave_speeds(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

/// Rankine-Hugoniot average over the outer fan [s_l, s_r]. Throws DegenerateFanError if
/// s_l == s_r.
EulerCons hll_state(const EulerCons& ul, const EulerCons& ur, const EulerFlux& fl,
                    const EulerFlux& fr, double s_l, double s_r);

/// Intermediate wave speed; equals (rho*u)/rho of the HLL average.
double contact_speed(const EulerPrim& wl, const EulerPrim& wr, double s_l, double s_r);

/// Interface record of a three-wave approximate Riemann solver.
struct EulerFan {
  double s_l = 0.0;
  double s_m = 0.0;
  double s_r = 0.0;
  double beta = 0.0;
  EulerCons u_hll{};
  EulerCons u_star_l{};
  EulerCons u_star_r{};
  EulerFlux flux{};
};

/// Four-branch sampling of a two-state fan at x/t = 0.
template <class Flux>
Flux sample_fan(const Flux& fl, const Flux& f_star_l, const Flux& f_star_r, const Flux& fr,
                double s_l, double s_m, double s_r) {
  if (s_l >= 0.0) return fl;
  if (s_m >= 0.0) return f_star_l;
  if (s_r > 0.0) return f_star_r;
  return fr;
}

EulerFlux rusanov_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

/// HLL expressed as a two-state fan whose star states both equal the HLL average.
EulerFan hll_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

/// Linde reconstruction: U_R* - U_L* = beta (U_R - U_L).
EulerFan linde_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                    double beta);

/// Internal reconstruction with quasi-isentropic density jump and continuous pressure
/// across the contact. Stiffened-gas or ideal EOS only; throws ClosureError for a
/// covolume EOS.
EulerFan rsir_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                   double beta);

/// Internal reconstruction for any EOS of this library: the energy jump is evaluated
/// from the EOS at the reconstructed star densities and the star pressure. Reduces to
/// rsir_flux for b = 0. Throws PositivityError when a star state leaves the EOS domain,
/// which rsir_flux never evaluates.
EulerFan rsir_flux_general(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                           double beta);

EulerFan hllc_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos);

enum class EulerSolver { rusanov, hll, hllc, linde, rsir };

std::string_view to_string(EulerSolver s);

/// Dispatches to the selected solver. `rsir` picks rsir_flux_general when the EOS has a
/// covolume.
EulerFlux euler_interface_flux(EulerSolver solver, const EulerPrim& wl, const EulerPrim& wr,
                               const EosParams& eos, double beta);

double max_wave_speed(const EulerPrim& w, const EosParams& eos);

}  // namespace rsir
