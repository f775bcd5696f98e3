#include "rsir/euler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsir/errors.hpp"

namespace rsir {

EulerCons cons_from_prim(const EulerPrim& w, const EosParams& eos) {
  check_admissible(eos, w.rho, w.p);
  return {{w.rho, w.rho * w.u, internal_energy_density(eos, w.rho, w.p) + 0.5 * w.rho * w.u * w.u}};
}

EulerPrim prim_from_cons(const EulerCons& u, const EosParams& eos) {
  const double rho = u[0];
  if (!(rho > 0.0)) {
    std::ostringstream msg;
    msg << "non-positive density " << rho;
    throw DomainError(msg.str());
  }
  const double vel = u[1] / rho;
  const double e = u[2] / rho - 0.5 * vel * vel;
  const double p = pressure(eos, rho, e);
  check_admissible(eos, rho, p);
  return {rho, vel, p};
}

EulerFlux physical_flux(const EulerPrim& w, const EosParams& eos) {
  const double etot = internal_energy_density(eos, w.rho, w.p) + 0.5 * w.rho * w.u * w.u;
  return {{w.rho * w.u, w.rho * w.u * w.u + w.p, (etot + w.p) * w.u}};
}

double max_wave_speed(const EulerPrim& w, const EosParams& eos) {
  return std::fabs(w.u) + sound_speed(eos, w.rho, w.p);
}

WaveSpeeds davis_wave_speeds(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  const double cl = sound_speed(eos, wl.rho, wl.p);
  const double cr = sound_speed(eos, wr.rho, wr.p);
  return {std::min(wl.u - cl, wr.u - cr), std::max(wl.u + cl, wr.u + cr)};
}

EulerCons hll_state(const EulerCons& ul, const EulerCons& ur, const EulerFlux& fl,
                    const EulerFlux& fr, double s_l, double s_r) {
  if (!(s_l < s_r)) throw DegenerateFanError("HLL average requested for a degenerate fan");
  EulerCons out;
  for (std::size_t k = 0; k < 3; ++k)
    out[k] = (fr[k] - fl[k] + s_l * ul[k] - s_r * ur[k]) / (s_l - s_r);
  return out;
}

double contact_speed(const EulerPrim& wl, const EulerPrim& wr, double s_l, double s_r) {
  const double den = wl.rho * (s_l - wl.u) - wr.rho * (s_r - wr.u);
  if (den == 0.0) throw DegenerateFanError("vanishing contact-speed denominator");
  return (wr.p - wl.p + wl.rho * wl.u * (s_l - wl.u) - wr.rho * wr.u * (s_r - wr.u)) / den;
}

EulerFlux rusanov_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  const double s = std::max(max_wave_speed(wl, eos), max_wave_speed(wr, eos));
  const EulerFlux fl = physical_flux(wl, eos);
  const EulerFlux fr = physical_flux(wr, eos);
  const EulerCons ul = cons_from_prim(wl, eos);
  const EulerCons ur = cons_from_prim(wr, eos);
  EulerFlux f;
  for (std::size_t k = 0; k < 3; ++k) f[k] = 0.5 * (fr[k] + fl[k] - s * (ur[k] - ul[k]));
  return f;
}

namespace {

// Everything a two-state reconstruction needs before choosing its contact jump.
struct FanInput {
  EulerCons ul, ur;
  EulerFlux fl, fr;
  double s_l, s_r, s_m;
  EulerCons u_hll;
};

FanInput fan_input(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  FanInput in;
  in.ul = cons_from_prim(wl, eos);
  in.ur = cons_from_prim(wr, eos);
  in.fl = physical_flux(wl, eos);
  in.fr = physical_flux(wr, eos);
  const WaveSpeeds s = davis_wave_speeds(wl, wr, eos);
  in.s_l = s.s_l;
  in.s_r = s.s_r;
  in.u_hll = hll_state(in.ul, in.ur, in.fl, in.fr, in.s_l, in.s_r);
  in.s_m = contact_speed(wl, wr, in.s_l, in.s_r);
  return in;
}

// Deviations U_L* - U_L and U_R* - U_R of the split U_L* = U_HLL - omega_R jump,
// U_R* = U_HLL + omega_L jump. Written without forming U_HLL so that a jump equal to the
// data jump across a steady contact gives exactly zero.
struct StarDeviation {
  double left, right;
};

StarDeviation star_deviation(const FanInput& in, double du, double df, double jump) {
  const double width = in.s_r - in.s_l;
  return {(in.s_r * du - df - (in.s_r - in.s_m) * jump) / width,
          (in.s_l * du - df - (in.s_l - in.s_m) * jump) / width};
}

// Splits the HLL average into U_L*, U_R* with U_R* - U_L* = jump, then evaluates the
// star fluxes from the outer Rankine-Hugoniot relations and samples x/t = 0.
EulerFan assemble_fan(const FanInput& in, const EulerCons& jump, double beta) {
  EulerFan fan;
  fan.s_l = in.s_l;
  fan.s_m = in.s_m;
  fan.s_r = in.s_r;
  fan.beta = beta;
  fan.u_hll = in.u_hll;
  EulerFlux f_star_l, f_star_r;
  for (std::size_t k = 0; k < 3; ++k) {
    const StarDeviation d =
        star_deviation(in, in.ur[k] - in.ul[k], in.fr[k] - in.fl[k], jump[k]);
    fan.u_star_l[k] = in.ul[k] + d.left;
    fan.u_star_r[k] = in.ur[k] + d.right;
    f_star_l[k] = in.fl[k] + in.s_l * d.left;
    f_star_r[k] = in.fr[k] + in.s_r * d.right;
  }
  fan.flux = sample_fan(in.fl, f_star_l, f_star_r, in.fr, in.s_l, in.s_m, in.s_r);
  return fan;
}

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
}

}  // namespace

EulerFan hll_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  return assemble_fan(fan_input(wl, wr, eos), EulerCons{}, 0.0);
}

EulerFan linde_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                    double beta) {
  check_beta(beta);
  const FanInput in = fan_input(wl, wr, eos);
  EulerCons jump;
  for (std::size_t k = 0; k < 3; ++k) jump[k] = beta * (in.ur[k] - in.ul[k]);
  return assemble_fan(in, jump, beta);
}

EulerFan rsir_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                   double beta) {
  check_beta(beta);
  if (eos.has_covolume())
    throw ClosureError("rsir_flux needs an ideal or stiffened-gas EOS; use rsir_flux_general");
  const FanInput in = fan_input(wl, wr, eos);
  const double c2_mean =
      0.5 * (sound_speed_sq(eos, wl.rho, wl.p) + sound_speed_sq(eos, wr.rho, wr.p));
  const double psi = beta * (wr.rho - wl.rho + (wl.p - wr.p) / c2_mean);
  const EulerCons jump{{psi, psi * in.s_m, psi * 0.5 * in.s_m * in.s_m}};
  return assemble_fan(in, jump, beta);
}

EulerFan rsir_flux_general(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                           double beta) {
  check_beta(beta);
  const FanInput in = fan_input(wl, wr, eos);
  if (beta == 0.0) return assemble_fan(in, EulerCons{}, 0.0);
  const double c2l = sound_speed_sq(eos, wl.rho, wl.p);
  const double c2r = sound_speed_sq(eos, wr.rho, wr.p);
  const double psi = beta * (wr.rho - wl.rho + (wl.p - wr.p) / (0.5 * (c2l + c2r)));

  const StarDeviation d = star_deviation(in, in.ur[0] - in.ul[0], in.fr[0] - in.fl[0], psi);
  const double rho_star_l = wl.rho + d.left;
  const double rho_star_r = wr.rho + d.right;
  // Continuous pressure across the contact: mean of the two isentropic estimates.
  const double p_star = 0.5 * (wl.p + c2l * d.left + wr.p + c2r * d.right);
  if (!is_admissible(eos, rho_star_l, p_star) || !is_admissible(eos, rho_star_r, p_star)) {
    std::ostringstream msg;
    msg << "inadmissible RSIR star state (rho*_L=" << rho_star_l << ", rho*_R=" << rho_star_r
        << ", p*=" << p_star << ")";
    throw PositivityError(msg.str());
  }
  const double energy_jump = internal_energy_density(eos, rho_star_r, p_star) -
                             internal_energy_density(eos, rho_star_l, p_star) +
                             psi * 0.5 * in.s_m * in.s_m;
  const EulerCons jump{{psi, psi * in.s_m, energy_jump}};
  return assemble_fan(in, jump, beta);
}

EulerFan hllc_flux(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  const FanInput in = fan_input(wl, wr, eos);
  auto star = [&](const EulerPrim& w, const EulerCons& u, double s) {
    if (s == in.s_m) return u;
    // ratio is exactly 1 when s_m = u, which keeps steady contacts exact.
    const double ratio = (s - w.u) / (s - in.s_m);
    const double mass = w.rho * ratio;
    const double work = mass * (in.s_m - w.u) * (in.s_m + w.p / (w.rho * (s - w.u)));
    return EulerCons{{mass, mass * in.s_m, u[2] * ratio + work}};
  };
  EulerFan fan;
  fan.s_l = in.s_l;
  fan.s_m = in.s_m;
  fan.s_r = in.s_r;
  fan.beta = 1.0;
  fan.u_hll = in.u_hll;
  fan.u_star_l = star(wl, in.ul, in.s_l);
  fan.u_star_r = star(wr, in.ur, in.s_r);
  EulerFlux f_star_l, f_star_r;
  for (std::size_t k = 0; k < 3; ++k) {
    f_star_l[k] = in.fl[k] + in.s_l * (fan.u_star_l[k] - in.ul[k]);
    f_star_r[k] = in.fr[k] + in.s_r * (fan.u_star_r[k] - in.ur[k]);
  }
  fan.flux = sample_fan(in.fl, f_star_l, f_star_r, in.fr, in.s_l, in.s_m, in.s_r);
  return fan;
}

std::string_view to_string(EulerSolver s) {
  switch (s) {
    case EulerSolver::rusanov: return "rusanov";
    case EulerSolver::hll: return "hll";
    case EulerSolver::hllc: return "hllc";
    case EulerSolver::linde: return "linde";
    case EulerSolver::rsir: return "rsir";
  }
  return "?";
}

EulerFlux euler_interface_flux(EulerSolver solver, const EulerPrim& wl, const EulerPrim& wr,
                               const EosParams& eos, double beta) {
  switch (solver) {
    case EulerSolver::rusanov: return rusanov_flux(wl, wr, eos);
    case EulerSolver::hll: return hll_flux(wl, wr, eos).flux;
    case EulerSolver::hllc: return hllc_flux(wl, wr, eos).flux;
    case EulerSolver::linde: return linde_flux(wl, wr, eos, beta).flux;
    case EulerSolver::rsir:
      return eos.has_covolume() ? rsir_flux_general(wl, wr, eos, beta).flux
                                : rsir_flux(wl, wr, eos, beta).flux;
  }
  return {};
}

}  // namespace rsir
