#include "rsir/twophase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsir/errors.hpp"
#include "rsir/euler.hpp"

namespace rsir {

TwoPhaseCons tp_cons_from_prim(const TwoPhasePrim& w, const TwoPhaseEos& eos) {
  check_admissible(eos.phase1, w.rho1, w.p1);
  check_admissible(eos.phase2, w.rho2, w.p2);
  const double a1 = w.alpha1;
  const double a2 = 1.0 - a1;
  const double e1 = internal_energy(eos.phase1, w.rho1, w.p1);
  const double e2 = internal_energy(eos.phase2, w.rho2, w.p2);
  const double m1 = a1 * w.rho1;
  const double m2 = a2 * w.rho2;
  return {{a1, m1, m1 * w.u1, m1 * (e1 + 0.5 * w.u1 * w.u1), m2, m2 * w.u2,
           m2 * (e2 + 0.5 * w.u2 * w.u2)}};
}

TwoPhasePrim tp_prim_from_cons(const TwoPhaseCons& u, const TwoPhaseEos& eos, bool* clamped) {
  double a1 = u[slot::alpha1];
  const bool clamp = !(a1 >= kAlphaFloor && a1 <= 1.0 - kAlphaFloor);
  if (clamp) a1 = std::clamp(std::isfinite(a1) ? a1 : 0.5, kAlphaFloor, 1.0 - kAlphaFloor);
  if (clamped) *clamped = clamp;
  const double m1 = u[slot::mass1];
  const double m2 = u[slot::mass2];
  if (!(m1 > 0.0) || !(m2 > 0.0)) {
    std::ostringstream msg;
    msg << "non-positive apparent density (phase 1: " << m1 << ", phase 2: " << m2 << ")";
    throw PositivityError(msg.str());
  }
  TwoPhasePrim w;
  w.alpha1 = a1;
  w.rho1 = m1 / a1;
  w.u1 = u[slot::mom1] / m1;
  w.p1 = pressure(eos.phase1, w.rho1, u[slot::energy1] / m1 - 0.5 * w.u1 * w.u1);
  w.rho2 = m2 / (1.0 - a1);
  w.u2 = u[slot::mom2] / m2;
  w.p2 = pressure(eos.phase2, w.rho2, u[slot::energy2] / m2 - 0.5 * w.u2 * w.u2);
  check_admissible(eos.phase1, w.rho1, w.p1);
  check_admissible(eos.phase2, w.rho2, w.p2);
  return w;
}

LocalConsVec local_state(const TwoPhaseCons& u) {
  return {{u[0], u[1], u[2], u[3], 1.0 - u[0], u[4], u[5], u[6]}};
}

TwoPhaseCons drop_alpha2(const LocalConsVec& v) {
  return {{v[0], v[1], v[2], v[3], v[5], v[6], v[7]}};
}

double interfacial_pressure(const TwoPhasePrim& wl, const TwoPhasePrim& wr) {
  if (wl.alpha1 > wr.alpha1) return wl.p1;
  if (wl.alpha1 < wr.alpha1) return wr.p1;
  return 0.5 * (wl.p1 + wr.p1);
}

LocalConsVec local_flux(const TwoPhasePrim& w, double pi, const TwoPhaseEos& eos) {
  const double a1 = w.alpha1;
  const double a2 = w.alpha2();
  const double m1 = a1 * w.rho1;
  const double m2 = a2 * w.rho2;
  const double etot1 = m1 * (internal_energy(eos.phase1, w.rho1, w.p1) + 0.5 * w.u1 * w.u1);
  const double etot2 = m2 * (internal_energy(eos.phase2, w.rho2, w.p2) + 0.5 * w.u2 * w.u2);
  const double au1 = a1 * w.u1;
  return {{au1, m1 * w.u1, m1 * w.u1 * w.u1 + a1 * (w.p1 - pi),
           (etot1 + a1 * (w.p1 - pi)) * w.u1, -au1, m2 * w.u2,
           m2 * w.u2 * w.u2 + a2 * (w.p2 - pi), (etot2 + a2 * w.p2) * w.u2 + pi * au1}};
}

TwoPhaseFlux tp_physical_flux(const TwoPhasePrim& w, const TwoPhaseEos& eos) {
  const double a1 = w.alpha1;
  const double a2 = w.alpha2();
  const double m1 = a1 * w.rho1;
  const double m2 = a2 * w.rho2;
  const double etot1 = m1 * (internal_energy(eos.phase1, w.rho1, w.p1) + 0.5 * w.u1 * w.u1);
  const double etot2 = m2 * (internal_energy(eos.phase2, w.rho2, w.p2) + 0.5 * w.u2 * w.u2);
  return {{a1 * w.u1, m1 * w.u1, m1 * w.u1 * w.u1 + a1 * w.p1, (etot1 + a1 * w.p1) * w.u1,
           m2 * w.u2, m2 * w.u2 * w.u2 + a2 * w.p2, (etot2 + a2 * w.p2) * w.u2}};
}

TwoPhaseWaveBounds tp_wave_bounds(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                                  const TwoPhaseEos& eos) {
  const double cl = sound_speed(eos.phase2, wl.rho2, wl.p2);
  const double cr = sound_speed(eos.phase2, wr.rho2, wr.p2);
  return {std::min({wl.u1, wr.u1, wl.u2 - cl, wr.u2 - cr}),
          std::max({wl.u1, wr.u1, wl.u2 + cl, wr.u2 + cr})};
}

double max_wave_speed(const TwoPhasePrim& w, const TwoPhaseEos& eos) {
  return std::max(std::fabs(w.u1), std::fabs(w.u2) + sound_speed(eos.phase2, w.rho2, w.p2));
}

double rusanov_speed(const TwoPhasePrim& wl, const TwoPhasePrim& wr, const TwoPhaseEos& eos) {
  return std::max(max_wave_speed(wl, eos), max_wave_speed(wr, eos));
}

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
}

void require_stiffened(const TwoPhaseEos& eos) {
  if (eos.phase1.has_covolume() || eos.phase2.has_covolume())
    throw ClosureError("two-phase reconstruction needs ideal or stiffened-gas phases");
}

// F = Phi + p_I (0, 0, alpha1*, (alpha u)1*, 0, 1 - alpha1*, -(alpha u)1*).
TwoPhaseFlux flux_from_local(const LocalConsVec& phi, double pi, double alpha_face,
                             double alpha_flux_face) {
  TwoPhaseFlux f = drop_alpha2(phi);
  f[slot::mom1] += pi * alpha_face;
  f[slot::energy1] += pi * alpha_flux_face;
  f[slot::mom2] += pi * (1.0 - alpha_face);
  f[slot::energy2] -= pi * alpha_flux_face;
  return f;
}

void check_star_state(const LocalConsVec& v, const TwoPhaseEos& eos, const char* side) {
  const double a1 = v[lslot::alpha1];
  const double a2 = v[lslot::alpha2];
  const double m1 = v[lslot::mass1];
  const double m2 = v[lslot::mass2];
  bool ok = a1 >= kAlphaFloor && a1 <= 1.0 - kAlphaFloor && a2 > 0.0 && m1 > 0.0 && m2 > 0.0;
  if (ok) {
    const double rho1 = m1 / a1;
    const double u1 = v[lslot::mom1] / m1;
    const double rho2 = m2 / a2;
    const double u2 = v[lslot::mom2] / m2;
    const double e1 = v[lslot::energy1] / m1 - 0.5 * u1 * u1;
    const double e2 = v[lslot::energy2] / m2 - 0.5 * u2 * u2;
    ok = 1.0 - rho1 * eos.phase1.b > 0.0 && 1.0 - rho2 * eos.phase2.b > 0.0 &&
         is_admissible(eos.phase1, rho1, pressure(eos.phase1, rho1, e1)) &&
         is_admissible(eos.phase2, rho2, pressure(eos.phase2, rho2, e2));
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "inadmissible reconstructed " << side << " star state (alpha1=" << a1
        << ", mass1=" << m1 << ", mass2=" << m2 << ")";
    throw PositivityError(msg.str());
  }
}

struct LocalInput {
  double pi;
  LocalConsVec vl, vr, phil, phir;
  double s_l, s_r;
  TwoPhaseHll hll;
};

LocalInput local_input(const TwoPhasePrim& wl, const TwoPhasePrim& wr, const TwoPhaseEos& eos) {
  LocalInput in;
  in.pi = interfacial_pressure(wl, wr);
  in.vl = local_state(tp_cons_from_prim(wl, eos));
  in.vr = local_state(tp_cons_from_prim(wr, eos));
  in.phil = local_flux(wl, in.pi, eos);
  in.phir = local_flux(wr, in.pi, eos);
  const TwoPhaseWaveBounds b = tp_wave_bounds(wl, wr, eos);
  in.s_l = b.s_l;
  in.s_r = b.s_r;
  in.hll = tp_hll_state(in.vl, in.vr, in.phil, in.phir, in.s_l, in.s_r);
  return in;
}

TwoPhaseFan assemble_fan(const LocalInput& in, const StarStates& star, double beta) {
  TwoPhaseFan fan;
  fan.s_l = in.s_l;
  fan.s_r = in.s_r;
  fan.s_m1 = in.hll.s_m1;
  fan.s_m2 = in.hll.s_m2;
  fan.rho2_bar = in.hll.rho2_bar;
  fan.beta = beta;
  fan.p_interface = in.pi;
  fan.u_hll = in.hll.u_hll;
  fan.u_star_l = star.left;
  fan.u_star_r = star.right;
  for (std::size_t k = 0; k < 8; ++k) {
    fan.flux_l[k] = in.phil[k] + in.s_l * (star.left[k] - in.vl[k]);
    fan.flux_r[k] = in.phir[k] + in.s_r * (star.right[k] - in.vr[k]);
  }
  const LocalConsVec phi =
      sample_fan(in.phil, fan.flux_l, fan.flux_r, in.phir, in.s_l, fan.s_m1, in.s_r);
  const double a_hll = in.hll.u_hll[lslot::alpha1];
  fan.alpha_face = sample_fan(in.vl[lslot::alpha1], a_hll, a_hll, in.vr[lslot::alpha1], in.s_l,
                              fan.s_m1, in.s_r);
  fan.alpha_flux_face = phi[lslot::alpha1];
  fan.flux = flux_from_local(phi, in.pi, fan.alpha_face, fan.alpha_flux_face);
  return fan;
}

}  // namespace

TwoPhaseFan rusanov_basic_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                               const TwoPhaseEos& eos) {
  const double s = rusanov_speed(wl, wr, eos);
  const TwoPhaseCons ul = tp_cons_from_prim(wl, eos);
  const TwoPhaseCons ur = tp_cons_from_prim(wr, eos);
  const TwoPhaseFlux fl = tp_physical_flux(wl, eos);
  const TwoPhaseFlux fr = tp_physical_flux(wr, eos);
  TwoPhaseFan fan;
  fan.s_l = -s;
  fan.s_r = s;
  fan.p_interface = interfacial_pressure(wl, wr);
  for (std::size_t k = 0; k < 7; ++k) fan.flux[k] = 0.5 * (fr[k] + fl[k] - s * (ur[k] - ul[k]));
  fan.alpha_face = 0.5 * (wl.alpha1 + wr.alpha1);
  fan.alpha_flux_face = 0.5 * (wl.alpha1 * wl.u1 + wr.alpha1 * wr.u1);
  return fan;
}

TwoPhaseFan rusanov_local_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                               const TwoPhaseEos& eos) {
  const double s = rusanov_speed(wl, wr, eos);
  const double pi = interfacial_pressure(wl, wr);
  const LocalConsVec vl = local_state(tp_cons_from_prim(wl, eos));
  const LocalConsVec vr = local_state(tp_cons_from_prim(wr, eos));
  const LocalConsVec phil = local_flux(wl, pi, eos);
  const LocalConsVec phir = local_flux(wr, pi, eos);
  LocalConsVec phi;
  for (std::size_t k = 0; k < 8; ++k) phi[k] = 0.5 * (phir[k] + phil[k] - s * (vr[k] - vl[k]));
  auto rusanov_fraction = [&](std::size_t k) {
    return 0.5 * (vr[k] + vl[k] - (phir[k] - phil[k]) / s);
  };
  const double a1 = rusanov_fraction(lslot::alpha1);
  const double a2 = rusanov_fraction(lslot::alpha2);

  TwoPhaseFan fan;
  fan.s_l = -s;
  fan.s_r = s;
  fan.p_interface = pi;
  fan.flux_l = phi;
  fan.flux_r = phi;
  fan.alpha_face = a1;
  fan.alpha_flux_face = phi[lslot::alpha1];
  fan.flux = drop_alpha2(phi);
  fan.flux[slot::mom1] += pi * a1;
  fan.flux[slot::energy1] += pi * phi[lslot::alpha1];
  fan.flux[slot::mom2] += pi * a2;
  fan.flux[slot::energy2] += pi * phi[lslot::alpha2];
  return fan;
}

TwoPhaseHll tp_hll_state(const LocalConsVec& vl, const LocalConsVec& vr,
                         const LocalConsVec& phil, const LocalConsVec& phir, double s_l,
                         double s_r) {
  if (!(s_l < s_r)) throw DegenerateFanError("two-phase HLL average for a degenerate fan");
  TwoPhaseHll out;
  for (std::size_t k = 0; k < 8; ++k)
    out.u_hll[k] = (phir[k] - phil[k] + s_l * vl[k] - s_r * vr[k]) / (s_l - s_r);
  const double m1 = out.u_hll[lslot::mass1];
  const double m2 = out.u_hll[lslot::mass2];
  const double a2 = out.u_hll[lslot::alpha2];
  if (!(m1 > 0.0)) throw PositivityError("non-positive HLL mass of phase 1");
  if (!(m2 > 0.0)) throw PositivityError("non-positive HLL mass of phase 2");
  if (!(a2 > 0.0)) throw PositivityError("non-positive HLL volume fraction of phase 2");
  out.s_m1 = out.u_hll[lslot::mom1] / m1;
  out.s_m2 = out.u_hll[lslot::mom2] / m2;
  out.rho2_bar = m2 / a2;
  return out;
}

StarStates rsir_reconstruct(const LocalConsVec& vl, const LocalConsVec& vr,
                            const TwoPhaseHll& hll, double u1_left, double u1_right,
                            double pi, double beta, double s_l, double s_r,
                            const TwoPhaseEos& eos) {
  check_beta(beta);
  require_stiffened(eos);
  const double width = s_r - s_l;
  const double sm1 = hll.s_m1;
  const double sm2 = hll.s_m2;
  const double omega_r = (s_r - sm1) / width;
  const double omega_l = (sm1 - s_l) / width;
  const LocalConsVec& h = hll.u_hll;
  LocalConsVec psi;

  // Dispersed phase: volume fraction, mass and momentum jumps first.
  const double d_mass1 = vr[lslot::mass1] - vl[lslot::mass1];
  psi[lslot::alpha1] = beta * (vr[lslot::alpha1] - vl[lslot::alpha1]);
  psi[lslot::mass1] = beta * d_mass1;
  psi[lslot::mom1] = beta * d_mass1 * sm1;
  const double mass1_l = h[lslot::mass1] - omega_r * psi[lslot::mass1];
  const double mass1_r = h[lslot::mass1] + omega_l * psi[lslot::mass1];

  // Energy jump from the phase-1 momentum interface condition with u1* = u1 on each side.
  const EosParams& e1 = eos.phase1;
  const double g1m = e1.gamma - 1.0;
  psi[lslot::energy1] =
      psi[lslot::alpha1] * (pi + e1.gamma * e1.p_inf) / g1m +
      psi[lslot::mass1] * 0.5 * sm1 * sm1 +
      beta * (mass1_l * u1_left * (u1_left - sm1) - mass1_r * u1_right * (u1_right - sm1)) / g1m;

  // Carrier phase: uniform density rho2_bar in both star states, u2* = S_M2.
  const EosParams& e2 = eos.phase2;
  const double g2m = e2.gamma - 1.0;
  const double d_alpha2 = -psi[lslot::alpha1];
  psi[lslot::alpha2] = d_alpha2;
  psi[lslot::mass2] = d_alpha2 * hll.rho2_bar;
  psi[lslot::mom2] = d_alpha2 * hll.rho2_bar * sm2;
  psi[lslot::energy2] =
      d_alpha2 * (hll.rho2_bar * (0.5 * sm2 * sm2 - sm2 * (sm2 - sm1) / g2m) +
                  (pi + e2.gamma * e2.p_inf) / g2m);

  StarStates out;
  for (std::size_t k = 0; k < 8; ++k) {
    out.left[k] = h[k] - omega_r * psi[k];
    out.right[k] = h[k] + omega_l * psi[k];
  }
  if (beta > 0.0) {
    check_star_state(out.left, eos, "left");
    check_star_state(out.right, eos, "right");
  }
  return out;
}

TwoPhaseFan tp_hll_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr, const TwoPhaseEos& eos) {
  const LocalInput in = local_input(wl, wr, eos);
  return assemble_fan(in, StarStates{in.hll.u_hll, in.hll.u_hll}, 0.0);
}

TwoPhaseFan rsir_tp_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                         const TwoPhaseEos& eos, double beta) {
  check_beta(beta);
  require_stiffened(eos);
  const LocalInput in = local_input(wl, wr, eos);
  try {
    const StarStates star = rsir_reconstruct(in.vl, in.vr, in.hll, wl.u1, wr.u1, in.pi, beta,
                                             in.s_l, in.s_r, eos);
    return assemble_fan(in, star, beta);
  } catch (const PositivityError&) {
    TwoPhaseFan fan = assemble_fan(in, StarStates{in.hll.u_hll, in.hll.u_hll}, 0.0);
    fan.fallback = true;
    return fan;
  }
}

std::string_view to_string(TwoPhaseSolver s) {
  switch (s) {
    case TwoPhaseSolver::rusanov_basic: return "rusanov-basic";
    case TwoPhaseSolver::rusanov_local: return "rusanov-local";
    case TwoPhaseSolver::hll: return "hll-tp";
    case TwoPhaseSolver::rsir: return "rsir-tp";
  }
  return "?";
}

TwoPhaseFan tp_interface_flux(TwoPhaseSolver solver, const TwoPhasePrim& wl,
                              const TwoPhasePrim& wr, const TwoPhaseEos& eos, double beta) {
  switch (solver) {
    case TwoPhaseSolver::rusanov_basic: return rusanov_basic_flux(wl, wr, eos);
    case TwoPhaseSolver::rusanov_local: return rusanov_local_flux(wl, wr, eos);
    case TwoPhaseSolver::hll: return tp_hll_flux(wl, wr, eos);
    case TwoPhaseSolver::rsir: return rsir_tp_flux(wl, wr, eos, beta);
  }
  return {};
}

NonConservativeTerms h_terms(double alpha_face_left, double alpha_face_right,
                             double alpha_flux_face_left, double alpha_flux_face_right,
                             double p_cell, double dx) {
  return {p_cell * (alpha_face_right - alpha_face_left) / dx,
          p_cell * (alpha_flux_face_right - alpha_flux_face_left) / dx};
}

void apply_h_terms(TwoPhaseCons& u, const NonConservativeTerms& h, double dt) {
  const double dm = dt * h.momentum;
  const double de = dt * h.energy;
  u[slot::mom1] += dm;
  u[slot::mom2] -= dm;
  u[slot::energy1] += de;
  u[slot::energy2] -= de;
}

double mixture_entropy(const TwoPhasePrim& w, const TwoPhaseEos& eos) {
  return w.alpha1 * w.rho1 * entropy(eos.phase1, w.rho1, w.p1) +
         w.alpha2() * w.rho2 * entropy(eos.phase2, w.rho2, w.p2);
}

}  // namespace rsir
