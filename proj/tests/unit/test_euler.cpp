#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "rsir/errors.hpp"

using namespace rsir;
using testing::max_rel_diff;

namespace {

// Every fan solver; the general reconstruction is left out when it rejects its star states.
std::vector<EulerFan> all_fans(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos,
                               double beta) {
  std::vector<EulerFan> fans{hll_flux(wl, wr, eos), linde_flux(wl, wr, eos, beta),
                             hllc_flux(wl, wr, eos)};
  if (!eos.has_covolume()) fans.push_back(rsir_flux(wl, wr, eos, beta));
  try {
    fans.push_back(rsir_flux_general(wl, wr, eos, beta));
  } catch (const PositivityError&) {
  }
  return fans;
}

// HLL flux written out directly.
EulerFlux hll_formula(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  const double cl = sound_speed(eos, wl.rho, wl.p), cr = sound_speed(eos, wr.rho, wr.p);
  const double sl = std::min(wl.u - cl, wr.u - cr), sr = std::max(wl.u + cl, wr.u + cr);
  const EulerFlux fl = physical_flux(wl, eos), fr = physical_flux(wr, eos);
  if (sl >= 0.0) return fl;
  if (sr <= 0.0) return fr;
  const EulerCons ul = cons_from_prim(wl, eos), ur = cons_from_prim(wr, eos);
  EulerFlux f;
  for (int k = 0; k < 3; ++k)
    f[k] = (sr * fl[k] - sl * fr[k] + sl * sr * (ur[k] - ul[k])) / (sr - sl);
  return f;
}

}  // namespace

TEST_CASE("conserved and primitive variables") {
  const auto a = testing::air();
  const EulerCons rest = cons_from_prim({1.0, 0.0, 1e5}, a);
  CHECK(rest[0] == 1.0);
  CHECK(rest[1] == 0.0);
  CHECK(rest[2] == doctest::Approx(2.5e5).epsilon(1e-15));
  const EulerCons moving = cons_from_prim({1.0, 100.0, 1e5}, a);
  CHECK(moving[2] == doctest::Approx(2.55e5).epsilon(1e-15));

  std::mt19937_64 rng(21);
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    for (int k = 0; k < 1000; ++k) {
      const EulerPrim w = testing::random_prim(rng, eos);
      const EulerPrim back = prim_from_cons(cons_from_prim(w, eos), eos);
      CHECK(testing::rel_diff(back.rho, w.rho) <= 1e-13);
      CHECK(std::fabs(back.u - w.u) <= 1e-13 * (std::fabs(w.u) + sound_speed(eos, w.rho, w.p)));
      CHECK(testing::rel_diff(back.p + eos.p_inf, w.p + eos.p_inf) <= 1e-12);
    }
  }
}

TEST_CASE("physical flux") {
  const auto a = testing::air();
  const EulerFlux rest = physical_flux({1.0, 0.0, 1e5}, a);
  CHECK(rest[0] == 0.0);
  CHECK(rest[1] == 1e5);
  CHECK(rest[2] == 0.0);
  const EulerFlux f = physical_flux({1.0, 100.0, 1e5}, a);
  CHECK(f[0] == doctest::Approx(100.0));
  CHECK(f[1] == doctest::Approx(1.1e5));
  CHECK(f[2] == doctest::Approx(3.55e7));
  const EulerFlux g = physical_flux({3.0, -7.0, 2e5}, a);
  CHECK(g[0] == -21.0);
}

TEST_CASE("Davis wave speeds") {
  const auto a = testing::air();
  // rho = 1.4 makes c^2 = p.
  const EulerPrim rest{1.4, 0.0, 9e4};
  auto s = davis_wave_speeds(rest, rest, a);
  CHECK(s.s_l == doctest::Approx(-300.0));
  CHECK(s.s_r == doctest::Approx(300.0));
  s = davis_wave_speeds({1.4, 100.0, 9e4}, {1.4, 50.0, 62500.0}, a);
  CHECK(s.s_l == doctest::Approx(-200.0));
  CHECK(s.s_r == doctest::Approx(400.0));
  // Supersonic left-moving flow keeps both bounds negative.
  s = davis_wave_speeds({1.4, -1000.0, 9e4}, {1.4, -1000.0, 9e4}, a);
  CHECK(s.s_l == doctest::Approx(-1300.0));
  CHECK(s.s_r == doctest::Approx(-700.0));
}

TEST_CASE("HLL average and contact speed") {
  const auto a = testing::air();
  const EulerPrim w{1.0, 30.0, 1e5};
  const EulerCons u = cons_from_prim(w, a);
  const EulerFlux f = physical_flux(w, a);
  CHECK(max_rel_diff(hll_state(u, u, f, f, -300.0, 400.0), u) <= 1e-15);
  CHECK_THROWS_AS(hll_state(u, u, f, f, 100.0, 100.0), DegenerateFanError);

  const EulerPrim cl{1.0, 0.0, 1e5}, cr{0.125, 0.0, 1e5};
  const auto s = davis_wave_speeds(cl, cr, a);
  const EulerCons h = hll_state(cons_from_prim(cl, a), cons_from_prim(cr, a),
                                physical_flux(cl, a), physical_flux(cr, a), s.s_l, s.s_r);
  CHECK(h[0] < 1.0);
  CHECK(h[0] > 0.125);

  CHECK(contact_speed(cl, cr, s.s_l, s.s_r) == 0.0);
  CHECK(contact_speed(w, w, -300.0, 400.0) == doctest::Approx(30.0).epsilon(1e-14));
  const EulerPrim ml{0.5, 80.0, 2e5}, mr{0.5, -80.0, 2e5};
  const auto ms = davis_wave_speeds(ml, mr, a);
  CHECK(std::fabs(contact_speed(ml, mr, ms.s_l, ms.s_r)) <= 1e-12);
}

TEST_CASE("HLL matches the closed-form flux") {
  std::mt19937_64 rng(22);
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    for (int k = 0; k < 500; ++k) {
      const EulerPrim wl = testing::random_prim(rng, eos), wr = testing::random_prim(rng, eos);
      const EulerFan fan = hll_flux(wl, wr, eos);
      const double s = std::max(-fan.s_l, fan.s_r);
      CHECK(testing::flux_diff(fan.flux, hll_formula(wl, wr, eos), cons_from_prim(wl, eos), s) <= 1e-14);
    }
  }
}

TEST_CASE("every solver is consistent on equal states") {
  std::mt19937_64 rng(23);
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    for (int k = 0; k < 200; ++k) {
      const EulerPrim w = testing::random_prim(rng, eos);
      const EulerFlux f = physical_flux(w, eos);
      const EulerCons u = cons_from_prim(w, eos);
      const double s = max_wave_speed(w, eos);
      for (double beta : {0.0, 0.5, 1.0})
        for (const auto& fan : all_fans(w, w, eos, beta))
          CHECK(testing::flux_diff(fan.flux, f, u, s) <= 1e-14);
      CHECK(testing::flux_diff(rusanov_flux(w, w, eos), f, u, s) <= 1e-14);
    }
  }
}

TEST_CASE("beta = 0 recovers HLL bit for bit") {
  std::mt19937_64 rng(24);
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    for (int k = 0; k < 300; ++k) {
      const EulerPrim wl = testing::random_prim(rng, eos), wr = testing::random_prim(rng, eos);
      const EulerFlux hll = hll_flux(wl, wr, eos).flux;
      CHECK(linde_flux(wl, wr, eos, 0.0).flux == hll);
      CHECK(rsir_flux_general(wl, wr, eos, 0.0).flux == hll);
      if (!eos.has_covolume()) CHECK(rsir_flux(wl, wr, eos, 0.0).flux == hll);
    }
  }
}

TEST_CASE("stationary contact is preserved exactly with beta = 1") {
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    const double scale = eos.p_inf > 0.0 ? 1000.0 : 1.0;
    const EulerPrim wl{scale, 0.0, 1e5}, wr{0.125 * scale, 0.0, 1e5};
    std::vector<EulerFlux> fluxes{rsir_flux_general(wl, wr, eos, 1.0).flux,
                                  hllc_flux(wl, wr, eos).flux};
    if (!eos.has_covolume()) {
      fluxes.push_back(rsir_flux(wl, wr, eos, 1.0).flux);
      fluxes.push_back(linde_flux(wl, wr, eos, 1.0).flux);
    }
    for (const auto& f : fluxes) {
      CHECK(f[0] == 0.0);
      CHECK(f[1] == 1e5);
      CHECK(f[2] == 0.0);
    }
  }
  // Rusanov diffuses the contact.
  const auto a = testing::air();
  const EulerPrim wl{1.0, 0.0, 1e5}, wr{0.125, 0.0, 1e5};
  const double s = std::max(sound_speed(a, 1.0, 1e5), sound_speed(a, 0.125, 1e5));
  CHECK(rusanov_flux(wl, wr, a)[0] == doctest::Approx(-s * (0.125 - 1.0) / 2.0));
}

TEST_CASE("moving contact: star velocity and pressure are exact") {
  for (const auto& eos : {testing::air(), testing::water_sg()}) {
    const double scale = eos.p_inf > 0.0 ? 1000.0 : 1.0;
    const EulerPrim wl{scale, 37.0, 2e5}, wr{0.3 * scale, 37.0, 2e5};
    for (const auto& fan : {rsir_flux(wl, wr, eos, 1.0), hllc_flux(wl, wr, eos)}) {
      for (const auto& star : {fan.u_star_l, fan.u_star_r}) {
        const EulerPrim w = prim_from_cons(star, eos);
        CHECK(w.u == doctest::Approx(37.0).epsilon(1e-10));
        CHECK(w.p == doctest::Approx(2e5).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("fan decomposition reproduces the HLL average") {
  std::mt19937_64 rng(25);
  for (const auto& eos : {testing::air(), testing::water_sg(), testing::water_nasg()}) {
    for (int k = 0; k < 300; ++k) {
      const EulerPrim wl = testing::random_prim(rng, eos), wr = testing::random_prim(rng, eos);
      for (const auto& fan : all_fans(wl, wr, eos, 1.0)) {
        const double w_l = (fan.s_m - fan.s_l) / (fan.s_r - fan.s_l);
        const double w_r = (fan.s_r - fan.s_m) / (fan.s_r - fan.s_l);
        CHECK(max_rel_diff(w_l * fan.u_star_l + w_r * fan.u_star_r, fan.u_hll) <= 1e-10);
      }
    }
  }
}

TEST_CASE("stationary contact mass flux decreases with beta") {
  const auto a = testing::air();
  const EulerPrim wl{1.0, 0.0, 1e5}, wr{0.125, 0.0, 1e5};
  double prev_linde = INFINITY, prev_rsir = INFINITY;
  for (int k = 0; k <= 20; ++k) {
    const double beta = k / 20.0;
    const double linde = std::fabs(linde_flux(wl, wr, a, beta).flux[0]);
    const double rsir = std::fabs(rsir_flux(wl, wr, a, beta).flux[0]);
    CHECK(linde <= prev_linde);
    CHECK(rsir <= prev_rsir);
    prev_linde = linde;
    prev_rsir = rsir;
  }
}

TEST_CASE("supersonic data are upwinded") {
  const auto a = testing::air();
  const EulerPrim l{1.0, 1000.0, 1e5}, r{0.5, 900.0, 5e4};
  const EulerPrim nl{1.0, -1000.0, 1e5}, nr{0.5, -900.0, 5e4};
  for (const auto& fan : all_fans(l, r, a, 1.0)) CHECK(fan.flux == physical_flux(l, a));
  for (const auto& fan : all_fans(nl, nr, a, 1.0)) CHECK(fan.flux == physical_flux(nr, a));
}

TEST_CASE("the general reconstruction agrees with the stiffened-gas form") {
  std::mt19937_64 rng(26);
  int tested = 0;
  for (const auto& eos : {testing::air(), testing::water_sg()}) {
    for (int k = 0; k < 500; ++k) {
      const EulerPrim wl = testing::random_prim(rng, eos), wr = testing::random_prim(rng, eos);
      // Strong expansions can push a star state out of the EOS domain, which only the
      // general form detects.
      EulerFan b;
      try {
        b = rsir_flux_general(wl, wr, eos, 1.0);
      } catch (const PositivityError&) {
        continue;
      }
      ++tested;
      const EulerFan a = rsir_flux(wl, wr, eos, 1.0);
      CHECK(max_rel_diff(a.flux, b.flux) <= 1e-12);
    }
  }
  CHECK(tested > 900);
}

TEST_CASE("covolume is rejected by the stiffened-gas reconstruction") {
  const EulerPrim w{1000.0, 0.0, 1e5};
  CHECK_THROWS_AS(rsir_flux(w, w, testing::water_nasg(), 1.0), ClosureError);
  // The dispatcher routes covolume data to the general form.
  const EulerFlux f = euler_interface_flux(EulerSolver::rsir, w, w, testing::water_nasg(), 1.0);
  CHECK(f[1] == doctest::Approx(1e5));
}

TEST_CASE("symmetric double shock has zero mass flux at the centre") {
  const auto a = testing::air();
  const EulerPrim wl{1.0, 200.0, 1e5}, wr{1.0, -200.0, 1e5};
  CHECK(std::fabs(rusanov_flux(wl, wr, a)[0]) <= 1e-12);
  for (const auto& fan : all_fans(wl, wr, a, 1.0)) CHECK(std::fabs(fan.flux[0]) <= 1e-10);
}

TEST_CASE("sample_fan picks the four branches") {
  CHECK(sample_fan(1.0, 2.0, 3.0, 4.0, 0.0, 1.0, 2.0) == 1.0);
  CHECK(sample_fan(1.0, 2.0, 3.0, 4.0, -1.0, 0.0, 2.0) == 2.0);
  CHECK(sample_fan(1.0, 2.0, 3.0, 4.0, -1.0, -0.5, 2.0) == 3.0);
  CHECK(sample_fan(1.0, 2.0, 3.0, 4.0, -2.0, -1.0, 0.0) == 4.0);
}
