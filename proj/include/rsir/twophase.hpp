#pragma once

#include <cstddef>
#include <string_view>

#include "rsir/eos.hpp"
#include "rsir/state.hpp"

namespace rsir {

/// Phase 1 is the dispersed phase, phase 2 the carrier.
struct TwoPhaseEos {
  EosParams phase1;
  EosParams phase2;
};

struct TwoPhasePrim {
  double alpha1 = 0.5;
  double rho1 = 1.0, u1 = 0.0, p1 = 1.0;
  double rho2 = 1.0, u2 = 0.0, p2 = 1.0;

  double alpha2() const { return 1.0 - alpha1; }
};

/// (alpha1, (a rho)1, (a rho u)1, (a rho E)1, (a rho)2, (a rho u)2, (a rho E)2)
using TwoPhaseCons = StateVec<7>;
/// Locally conservative image: TwoPhaseCons with alpha2 inserted as slot 4.
using LocalConsVec = StateVec<8>;
/// Flux of the non-conservative form, same layout as TwoPhaseCons.
using TwoPhaseFlux = StateVec<7>;

namespace slot {
inline constexpr std::size_t alpha1 = 0, mass1 = 1, mom1 = 2, energy1 = 3, mass2 = 4, mom2 = 5,
                             energy2 = 6;
}  // namespace slot

namespace lslot {
inline constexpr std::size_t alpha1 = 0, mass1 = 1, mom1 = 2, energy1 = 3, alpha2 = 4,
                             mass2 = 5, mom2 = 6, energy2 = 7;
}  // namespace lslot

/// Volume fractions are clamped to [kAlphaFloor, 1 - kAlphaFloor] on state recovery.
inline constexpr double kAlphaFloor = 1e-8;

TwoPhaseCons tp_cons_from_prim(const TwoPhasePrim& w, const TwoPhaseEos& eos);

/// Inverse of tp_cons_from_prim. `clamped`, when given, is set if alpha1 was floored.
/// Throws PositivityError for non-positive phase masses and DomainError for
/// inadmissible phase thermodynamics.
TwoPhasePrim tp_prim_from_cons(const TwoPhaseCons& u, const TwoPhaseEos& eos,
                               bool* clamped = nullptr);

LocalConsVec local_state(const TwoPhaseCons& u);
TwoPhaseCons drop_alpha2(const LocalConsVec& v);

/// Phase-1 pressure of the side holding more of phase 1; mean of both on a tie.
double interfacial_pressure(const TwoPhasePrim& wl, const TwoPhasePrim& wr);

/// Flux of the locally conservative system for a frozen interfacial pressure.
LocalConsVec local_flux(const TwoPhasePrim& w, double p_interface, const TwoPhaseEos& eos);

/// Conservative part F of the non-conservative form.
TwoPhaseFlux tp_physical_flux(const TwoPhasePrim& w, const TwoPhaseEos& eos);

struct TwoPhaseWaveBounds {
  double s_l = 0.0;
  double s_r = 0.0;
};

/// Outer speeds from the eigenvalues u1, u2 - c2, u2 + c2 of both states.
TwoPhaseWaveBounds tp_wave_bounds(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                                  const TwoPhaseEos& eos);
/// Largest |eigenvalue| over both states.
double rusanov_speed(const TwoPhasePrim& wl, const TwoPhasePrim& wr, const TwoPhaseEos& eos);
double max_wave_speed(const TwoPhasePrim& w, const TwoPhaseEos& eos);

/// Interface record shared by all two-phase solvers. `alpha_face` and `alpha_flux_face`
/// feed the non-conservative cell terms; `flux` is what enters the conservative update.
struct TwoPhaseFan {
  double s_l = 0.0, s_r = 0.0;
  double s_m1 = 0.0, s_m2 = 0.0;
  double beta = 0.0;
  double p_interface = 0.0;
  double rho2_bar = 0.0;
  LocalConsVec u_hll{};
  LocalConsVec u_star_l{}, u_star_r{};
  LocalConsVec flux_l{}, flux_r{};
  TwoPhaseFlux flux{};
  double alpha_face = 0.0;
  double alpha_flux_face = 0.0;
  bool fallback = false;
};

/// Rusanov average of F; face data are arithmetic means of the two states.
TwoPhaseFan rusanov_basic_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                               const TwoPhaseEos& eos);

/// Rusanov flux of the locally conservative system, converted back to F.
TwoPhaseFan rusanov_local_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                               const TwoPhaseEos& eos);

struct TwoPhaseHll {
  LocalConsVec u_hll{};
  double s_m1 = 0.0;
  double s_m2 = 0.0;
  double rho2_bar = 0.0;
};

/// HLL average of the locally conservative system and the two phase-contact speeds.
/// Throws PositivityError for a non-positive averaged phase mass or carrier fraction.
TwoPhaseHll tp_hll_state(const LocalConsVec& vl, const LocalConsVec& vr,
                         const LocalConsVec& phil, const LocalConsVec& phir, double s_l,
                         double s_r);

struct StarStates {
  LocalConsVec left{};
  LocalConsVec right{};
};

/// Rebuilds U_L*, U_R* from the HLL average. Both phases must be stiffened or ideal
/// gases. Throws PositivityError when a star state is inadmissible.
StarStates rsir_reconstruct(const LocalConsVec& vl, const LocalConsVec& vr,
                            const TwoPhaseHll& hll, double u1_left, double u1_right,
                            double p_interface, double beta, double s_l, double s_r,
                            const TwoPhaseEos& eos);

/// HLL flux of the locally conservative system with the two-phase sampling rule.
TwoPhaseFan tp_hll_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr, const TwoPhaseEos& eos);

/// Internal reconstruction flux. If the reconstruction is inadmissible the interface is
/// recomputed with beta = 0 and `fallback` is set.
TwoPhaseFan rsir_tp_flux(const TwoPhasePrim& wl, const TwoPhasePrim& wr,
                         const TwoPhaseEos& eos, double beta);

enum class TwoPhaseSolver { rusanov_basic, rusanov_local, hll, rsir };

std::string_view to_string(TwoPhaseSolver s);

TwoPhaseFan tp_interface_flux(TwoPhaseSolver solver, const TwoPhasePrim& wl,
                              const TwoPhasePrim& wr, const TwoPhaseEos& eos, double beta);

/// Non-conservative cell increments, to be multiplied by dt: +momentum/+energy on phase 1
/// and the opposite on phase 2.
struct NonConservativeTerms {
  double momentum = 0.0;
  double energy = 0.0;
};

NonConservativeTerms h_terms(double alpha_face_left, double alpha_face_right,
                             double alpha_flux_face_left, double alpha_flux_face_right,
                             double p_cell, double dx);

/// Adds dt * H to a cell state.
void apply_h_terms(TwoPhaseCons& u, const NonConservativeTerms& h, double dt);

/// alpha1 rho1 s1 + alpha2 rho2 s2.
double mixture_entropy(const TwoPhasePrim& w, const TwoPhaseEos& eos);

}  // namespace rsir
