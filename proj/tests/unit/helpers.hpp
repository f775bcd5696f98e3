#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "rsir/eos.hpp"
#include "rsir/euler.hpp"
#include "rsir/twophase.hpp"

namespace testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

template <class V>
double max_rel_diff(const V& a, const V& b) {
  double scale = 0.0, diff = 0.0;
  for (std::size_t i = 0; i < V::size(); ++i) {
    scale = std::max({scale, std::fabs(a[i]), std::fabs(b[i])});
    diff = std::max(diff, std::fabs(a[i] - b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

// Flux difference relative to the update it drives: max|F| + S max|U|. Fan fluxes carry
// S times the rounding of the star states, which dominates |F| for stiff liquids.
template <class F, class U>
double flux_diff(const F& a, const F& b, const U& u, double speed) {
  double f = 0.0, s = 0.0, d = 0.0;
  for (std::size_t i = 0; i < F::size(); ++i) {
    f = std::max({f, std::fabs(a[i]), std::fabs(b[i])});
    d = std::max(d, std::fabs(a[i] - b[i]));
  }
  for (std::size_t i = 0; i < U::size(); ++i) s = std::max(s, std::fabs(u[i]));
  return d / (f + std::fabs(speed) * s);
}

inline const rsir::EosParams& air() {
  static const rsir::EosParams e = *rsir::eos_preset("air-ideal");
  return e;
}
inline const rsir::EosParams& water_sg() {
  static const rsir::EosParams e = *rsir::eos_preset("water-sg");
  return e;
}
inline const rsir::EosParams& water_nasg() {
  static const rsir::EosParams e = *rsir::eos_preset("water-nasg");
  return e;
}
inline rsir::TwoPhaseEos water_air() { return {water_sg(), air()}; }

// Admissible random primitive state for a given EOS family.
inline rsir::EulerPrim random_prim(std::mt19937_64& rng, const rsir::EosParams& eos) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  if (eos.p_inf > 0.0) {
    const double rho = 600.0 + 800.0 * u01(rng);
    return {rho, -50.0 + 100.0 * u01(rng), 1e5 * std::pow(10.0, 4.0 * u01(rng))};
  }
  return {0.1 + 5.0 * u01(rng), -200.0 + 400.0 * u01(rng),
          1e4 * std::pow(10.0, 2.0 * u01(rng))};
}

inline rsir::TwoPhasePrim random_tp_prim(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  rsir::TwoPhasePrim w;
  w.alpha1 = 0.001 + 0.5 * u01(rng);
  w.rho1 = 900.0 + 200.0 * u01(rng);
  w.u1 = -20.0 + 40.0 * u01(rng);
  w.p1 = 1e5 * (1.0 + 9.0 * u01(rng));
  w.rho2 = 0.5 + 10.0 * u01(rng);
  w.u2 = -20.0 + 40.0 * u01(rng);
  w.p2 = 1e5 * (1.0 + 9.0 * u01(rng));
  return w;
}

}  // namespace testing
