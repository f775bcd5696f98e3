#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "rsir/errors.hpp"

using namespace rsir;
using testing::max_rel_diff;

namespace {

TwoPhasePrim rest_state(double alpha1, double rho1, double rho2, double p) {
  TwoPhasePrim w;
  w.alpha1 = alpha1;
  w.rho1 = rho1;
  w.rho2 = rho2;
  w.u1 = w.u2 = 0.0;
  w.p1 = w.p2 = p;
  return w;
}

}  // namespace

TEST_CASE("two-phase conserved variables round trip") {
  const TwoPhaseEos eos = testing::water_air();
  const TwoPhasePrim w = rest_state(0.5, 1000.0, 1.0, 1e5);
  const TwoPhaseCons u = tp_cons_from_prim(w, eos);
  CHECK(u[slot::energy1] == doctest::Approx(0.5 * 1000.0 * internal_energy(eos.phase1, 1000.0, 1e5)));
  CHECK(u[slot::energy2] == doctest::Approx(0.5 * 1.0 * internal_energy(eos.phase2, 1.0, 1e5)));
  const TwoPhasePrim b = tp_prim_from_cons(u, eos);
  CHECK(b.alpha1 == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(b.p1 == doctest::Approx(1e5).epsilon(1e-13));
  CHECK(b.p2 == doctest::Approx(1e5).epsilon(1e-13));

  std::mt19937_64 rng(31);
  for (int k = 0; k < 1000; ++k) {
    const TwoPhasePrim r = testing::random_tp_prim(rng);
    const TwoPhasePrim s = tp_prim_from_cons(tp_cons_from_prim(r, eos), eos);
    CHECK(testing::rel_diff(s.alpha1, r.alpha1) <= 1e-12);
    CHECK(testing::rel_diff(s.rho1, r.rho1) <= 1e-12);
    CHECK(testing::rel_diff(s.rho2, r.rho2) <= 1e-12);
    // Water pressure is a small difference of large energies.
    CHECK(testing::rel_diff(s.p1 + eos.phase1.p_inf, r.p1 + eos.phase1.p_inf) <= 1e-12);
    CHECK(testing::rel_diff(s.p2, r.p2) <= 1e-12);
  }
}

TEST_CASE("volume fraction floor is reported") {
  const TwoPhaseEos eos = testing::water_air();
  TwoPhaseCons u = tp_cons_from_prim(rest_state(0.1, 1000.0, 1.0, 1e5), eos);
  u[slot::alpha1] = -1e-3;
  bool clamped = false;
  const TwoPhasePrim w = tp_prim_from_cons(u, eos, &clamped);
  CHECK(clamped);
  CHECK(w.alpha1 == kAlphaFloor);
  u[slot::mass1] = -1.0;
  CHECK_THROWS_AS(tp_prim_from_cons(u, eos), PositivityError);
}

TEST_CASE("interfacial pressure branches") {
  TwoPhasePrim l = rest_state(0.5, 1000.0, 1.0, 1e5), r = rest_state(0.3, 1000.0, 1.0, 1e5);
  l.p1 = 3e5;
  r.p1 = 2e5;
  CHECK(interfacial_pressure(l, r) == 3e5);
  l.alpha1 = 0.1;
  r.alpha1 = 0.4;
  CHECK(interfacial_pressure(l, r) == 2e5);
  r.alpha1 = 0.1;
  r.p1 = 3e5;
  CHECK(interfacial_pressure(l, r) == 3e5);
}

TEST_CASE("local flux at rest and its dependence on the interfacial pressure") {
  const TwoPhaseEos eos = testing::water_air();
  TwoPhasePrim w = rest_state(0.3, 1000.0, 1.0, 1e5);
  w.p1 = 2e5;
  w.p2 = 1.5e5;
  const double pi = 1.2e5;
  const LocalConsVec phi = local_flux(w, pi, eos);
  for (std::size_t k : {0, 1, 3, 4, 5, 7}) CHECK(phi[k] == 0.0);
  CHECK(phi[lslot::mom1] == doctest::Approx(0.3 * (2e5 - pi)));
  CHECK(phi[lslot::mom2] == doctest::Approx(0.7 * (1.5e5 - pi)));

  const LocalConsVec eq = local_flux(rest_state(0.3, 1000.0, 1.0, 1e5), 1e5, eos);
  for (std::size_t k = 0; k < 8; ++k) CHECK(eq[k] == 0.0);

  TwoPhasePrim m = w;
  m.u1 = 12.0;
  m.u2 = -3.0;
  const LocalConsVec a = local_flux(m, 1e5, eos), b = local_flux(m, 2e5, eos);
  const double au1 = m.alpha1 * m.u1;
  const double slope[8] = {0.0, 0.0, -m.alpha1, -au1, 0.0, 0.0, -m.alpha2(), au1};
  for (std::size_t k = 0; k < 8; ++k)
    CHECK((b[k] - a[k]) / 1e5 == doctest::Approx(slope[k]).epsilon(1e-9).scale(1.0));
}

TEST_CASE("wave bounds") {
  const TwoPhaseEos eos{testing::water_sg(), EosParams::ideal(1.4)};
  // rho2 = 1.4 and p2 = 340^2 give c2 = 340.
  TwoPhasePrim w = rest_state(0.01, 1000.0, 1.4, 340.0 * 340.0);
  auto b = tp_wave_bounds(w, w, eos);
  CHECK(b.s_l == doctest::Approx(-340.0));
  CHECK(b.s_r == doctest::Approx(340.0));
  CHECK(rusanov_speed(w, w, eos) == doctest::Approx(340.0));
  w.u1 = 500.0;
  b = tp_wave_bounds(w, w, eos);
  CHECK(b.s_r == 500.0);
  TwoPhasePrim l = rest_state(0.2, 1000.0, 2.0, 1e5), r = l;
  l.u1 = 30.0;
  l.u2 = 20.0;
  r.u1 = -30.0;
  r.u2 = -20.0;
  b = tp_wave_bounds(l, r, eos);
  CHECK(b.s_l == doctest::Approx(-b.s_r).epsilon(1e-14));
}

TEST_CASE("two-phase solvers are consistent on equal states") {
  const TwoPhaseEos eos = testing::water_air();
  std::mt19937_64 rng(32);
  for (int k = 0; k < 300; ++k) {
    const TwoPhasePrim w = testing::random_tp_prim(rng);
    const TwoPhaseFlux f = tp_physical_flux(w, eos);
    const TwoPhaseCons u = tp_cons_from_prim(w, eos);
    const double s = max_wave_speed(w, eos);
    CHECK(testing::flux_diff(rusanov_basic_flux(w, w, eos).flux, f, u, s) <= 1e-14);
    CHECK(testing::flux_diff(rusanov_local_flux(w, w, eos).flux, f, u, s) <= 1e-14);
    CHECK(testing::flux_diff(tp_hll_flux(w, w, eos).flux, f, u, s) <= 1e-14);
    for (double beta : {0.0, 0.5, 1.0}) {
      const TwoPhaseFan fan = rsir_tp_flux(w, w, eos, beta);
      CHECK(testing::flux_diff(fan.flux, f, u, s) <= 1e-14);
      CHECK(max_rel_diff(fan.u_star_l, fan.u_star_r) <= 1e-13);
      CHECK(max_rel_diff(fan.u_star_l, local_state(tp_cons_from_prim(w, eos))) <= 1e-13);
    }
  }
}

TEST_CASE("HLL average of equal states") {
  const TwoPhaseEos eos = testing::water_air();
  TwoPhasePrim w = rest_state(0.2, 1000.0, 1.2, 2e5);
  w.u1 = 7.0;
  w.u2 = -4.0;
  const LocalConsVec v = local_state(tp_cons_from_prim(w, eos));
  const LocalConsVec phi = local_flux(w, w.p1, eos);
  const TwoPhaseHll h = tp_hll_state(v, v, phi, phi, -400.0, 500.0);
  CHECK(max_rel_diff(h.u_hll, v) <= 1e-14);
  CHECK(h.s_m1 == doctest::Approx(7.0).epsilon(1e-13));
  CHECK(h.s_m2 == doctest::Approx(-4.0).epsilon(1e-13));
  CHECK(h.rho2_bar == doctest::Approx(1.2).epsilon(1e-13));

  const TwoPhaseFan rest = rsir_tp_flux(rest_state(0.2, 1000.0, 1.2, 2e5),
                                        rest_state(0.01, 1000.0, 1.2, 2e5), eos, 1.0);
  CHECK(rest.s_m1 == 0.0);
  CHECK(rest.s_m2 == 0.0);

  TwoPhasePrim ml = rest_state(0.2, 1000.0, 1.2, 2e5), mr = ml;
  ml.u1 = 15.0;
  ml.u2 = 10.0;
  mr.u1 = -15.0;
  mr.u2 = -10.0;
  CHECK(std::fabs(rsir_tp_flux(ml, mr, eos, 1.0).s_m1) <= 1e-12);
}

TEST_CASE("stationary volume fraction discontinuity") {
  const TwoPhaseEos eos = testing::water_air();
  const TwoPhasePrim l = rest_state(0.1, 1000.0, 1.0, 1e5), r = rest_state(0.001, 1000.0, 1.0, 1e5);
  const TwoPhaseFan fan = rsir_tp_flux(l, r, eos, 1.0);
  CHECK_FALSE(fan.fallback);
  CHECK(max_rel_diff(fan.u_star_l, local_state(tp_cons_from_prim(l, eos))) <= 1e-12);
  CHECK(max_rel_diff(fan.u_star_r, local_state(tp_cons_from_prim(r, eos))) <= 1e-12);
  // Zero up to the rounding of S * (U* - U).
  const double s = std::max(-fan.s_l, fan.s_r);
  CHECK(std::fabs(fan.flux[slot::mass1]) <= 1e-15 * s * 100.0);
  CHECK(std::fabs(fan.flux[slot::mass2]) <= 1e-15 * s * 1.0);
  CHECK(fan.flux[slot::mom1] + fan.flux[slot::mom2] == doctest::Approx(1e5).epsilon(1e-14));

  // With beta = 0 the star states collapse onto the HLL average.
  const TwoPhaseFan hll = rsir_tp_flux(l, r, eos, 0.0);
  CHECK(hll.u_star_l == hll.u_hll);
  CHECK(hll.u_star_r == hll.u_hll);
}

TEST_CASE("beta = 0 reconstruction is the two-phase HLL flux bit for bit") {
  const TwoPhaseEos eos = testing::water_air();
  std::mt19937_64 rng(33);
  int tested = 0;
  for (int k = 0; k < 500; ++k) {
    const TwoPhasePrim l = testing::random_tp_prim(rng), r = testing::random_tp_prim(rng);
    TwoPhaseFan hll;
    try {
      hll = tp_hll_flux(l, r, eos);
    } catch (const PositivityError&) {
      continue;
    }
    ++tested;
    const TwoPhaseFan rs = rsir_tp_flux(l, r, eos, 0.0);
    CHECK(rs.flux == hll.flux);
    CHECK(rs.alpha_face == hll.alpha_face);
    CHECK(rs.alpha_flux_face == hll.alpha_flux_face);
  }
  CHECK(tested > 400);
}

TEST_CASE("reconstructed star states satisfy decomposition and saturation") {
  const TwoPhaseEos eos = testing::water_air();
  std::mt19937_64 rng(34);
  for (int k = 0; k < 500; ++k) {
    const TwoPhasePrim l = testing::random_tp_prim(rng), r = testing::random_tp_prim(rng);
    TwoPhaseFan fan;
    try {
      fan = rsir_tp_flux(l, r, eos, 1.0);
    } catch (const PositivityError&) {
      continue;
    }
    const double w_l = (fan.s_m1 - fan.s_l) / (fan.s_r - fan.s_l);
    const double w_r = (fan.s_r - fan.s_m1) / (fan.s_r - fan.s_l);
    CHECK(max_rel_diff(w_l * fan.u_star_l + w_r * fan.u_star_r, fan.u_hll) <= 1e-10);
    for (const auto& s : {fan.u_star_l, fan.u_star_r})
      CHECK(std::fabs(s[lslot::alpha1] + s[lslot::alpha2] - 1.0) <= 1e-13);
  }
}

TEST_CASE("Rusanov local interface fraction stays between the data") {
  const TwoPhaseEos eos = testing::water_air();
  std::mt19937_64 rng(35);
  for (int k = 0; k < 1000; ++k) {
    TwoPhasePrim l = testing::random_tp_prim(rng), r = testing::random_tp_prim(rng);
    r.u1 = l.u1;
    const TwoPhaseFan fan = rusanov_local_flux(l, r, eos);
    CHECK(fan.alpha_face >= std::min(l.alpha1, r.alpha1) - 1e-15);
    CHECK(fan.alpha_face <= std::max(l.alpha1, r.alpha1) + 1e-15);
  }
}

TEST_CASE("non-conservative terms") {
  const NonConservativeTerms zero = h_terms(0.3, 0.3, 0.6, 0.6, 1e5, 0.01);
  CHECK(zero.momentum == 0.0);
  CHECK(zero.energy == 0.0);
  const NonConservativeTerms h = h_terms(0.3, 0.1, 0.6, 0.2, 1e5, 0.01);
  CHECK(h.momentum != 0.0);

  const TwoPhaseEos eos = testing::water_air();
  TwoPhaseCons u = tp_cons_from_prim(rest_state(0.2, 1000.0, 1.0, 1e5), eos);
  const TwoPhaseCons before = u;
  apply_h_terms(u, h, 1e-6);
  const double dmom1 = u[slot::mom1] - before[slot::mom1];
  const double dmom2 = u[slot::mom2] - before[slot::mom2];
  const double de1 = u[slot::energy1] - before[slot::energy1];
  const double de2 = u[slot::energy2] - before[slot::energy2];
  CHECK(dmom1 == -dmom2);
  CHECK(std::fabs(de1 + de2) <= 1e-12 * std::fabs(before[slot::energy1]));
  CHECK(u[slot::mass1] == before[slot::mass1]);
  CHECK(u[slot::mass2] == before[slot::mass2]);
}

TEST_CASE("mixture entropy") {
  const TwoPhaseEos eos = testing::water_air();
  TwoPhasePrim w = rest_state(kAlphaFloor, 1000.0, 1.2, 1e5);
  const double s1 = entropy(eos.phase1, w.rho1, w.p1);
  const double carrier = w.alpha2() * w.rho2 * entropy(eos.phase2, w.rho2, w.p2);
  const double mix = mixture_entropy(w, eos);
  CHECK(mix == doctest::Approx(w.alpha1 * w.rho1 * s1 + carrier).epsilon(1e-14));
  // The dispersed contribution is bounded by the floor.
  CHECK(std::fabs(mix - carrier) <= 1.01 * kAlphaFloor * w.rho1 * std::fabs(s1));
}

TEST_CASE("covolume phases are rejected by the reconstruction") {
  const TwoPhaseEos eos{testing::water_nasg(), testing::air()};
  const TwoPhasePrim w = rest_state(0.2, 1000.0, 1.0, 1e5);
  CHECK_THROWS(rsir_tp_flux(w, w, eos, 1.0));
  CHECK_THROWS_AS(rsir_tp_flux(w, w, testing::water_air(), 1.5), std::invalid_argument);
}
