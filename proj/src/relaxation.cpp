#include "rsir/relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rsir/errors.hpp"

namespace rsir {

namespace {

// alpha_k'(p) = (c0 + c1 p) / (gamma (p + p_inf)) for a phase with mass m, volume
// fraction alpha and specific internal energy e.
struct PhaseLine {
  double c0, c1, gamma, p_inf;

  double alpha(double p) const { return (c0 + c1 * p) / (gamma * (p + p_inf)); }
  double d_alpha(double p) const {
    const double s = p + p_inf;
    return (c1 * p_inf - c0) / (gamma * s * s);
  }
};

PhaseLine phase_line(const EosParams& eos, double mass, double alpha, double e) {
  return {(eos.gamma - 1.0) * mass * e + eos.gamma * eos.p_inf * mass * eos.b,
          (eos.gamma - 1.0) * alpha + mass * eos.b, eos.gamma, eos.p_inf};
}

struct Split {
  TwoPhasePrim w;
  double e1, e2;
  PhaseLine l1, l2;
};

Split split(const TwoPhaseCons& u, const TwoPhaseEos& eos) {
  Split s;
  s.w = tp_prim_from_cons(u, eos);
  s.e1 = internal_energy(eos.phase1, s.w.rho1, s.w.p1);
  s.e2 = internal_energy(eos.phase2, s.w.rho2, s.w.p2);
  s.l1 = phase_line(eos.phase1, u[slot::mass1], s.w.alpha1, s.e1);
  s.l2 = phase_line(eos.phase2, u[slot::mass2], s.w.alpha2(), s.e2);
  return s;
}

double pressure_residual(double p1, double p2) {
  const double scale = std::max(std::fabs(p1), std::fabs(p2));
  return scale > 0.0 ? std::fabs(p1 - p2) / scale : 0.0;
}

[[noreturn]] void relax_failure(const TwoPhaseCons& u, const char* why) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "pressure relaxation failed (" << why << ") for state [";
  for (std::size_t k = 0; k < u.v.size(); ++k) msg << (k ? ", " : "") << u[k];
  msg << "]";
  throw RelaxationError(msg.str());
}

}  // namespace

double saturation_residual(const TwoPhaseCons& u, const TwoPhaseEos& eos, double p) {
  const Split s = split(u, eos);
  return s.l1.alpha(p) + s.l2.alpha(p) - 1.0;
}

RelaxResult pressure_relax_stiff(const TwoPhaseCons& u, const TwoPhaseEos& eos) {
  const Split s = split(u, eos);
  RelaxResult out{u, {}};
  const double r0 = pressure_residual(s.w.p1, s.w.p2);
  if (r0 <= 1e-12) {
    out.report.p_eq = s.w.p1;
    out.report.residual = r0;
    return out;
  }

  // Multiply sum alpha_k' = 1 by gamma1 gamma2 (p + p_inf1)(p + p_inf2): a quadratic
  // with a < 0 whose larger root is the only one above -min(p_inf).
  const PhaseLine& a1 = s.l1;
  const PhaseLine& a2 = s.l2;
  const double g1 = a1.gamma, g2 = a2.gamma, q1 = a1.p_inf, q2 = a2.p_inf;
  const double qa = a1.c1 * g2 + a2.c1 * g1 - g1 * g2;
  const double qb = a1.c0 * g2 + a1.c1 * g2 * q2 + a2.c0 * g1 + a2.c1 * g1 * q1 - g1 * g2 * (q1 + q2);
  const double qc = a1.c0 * g2 * q2 + a2.c0 * g1 * q1 - g1 * g2 * q1 * q2;
  const double disc = qb * qb - 4.0 * qa * qc;
  const double p_floor = -std::min(q1, q2);
  auto g = [&](double p) { return a1.alpha(p) + a2.alpha(p) - 1.0; };
  auto dg = [&](double p) { return a1.d_alpha(p) + a2.d_alpha(p); };

  double p = std::numeric_limits<double>::quiet_NaN();
  if (qa < 0.0 && disc >= 0.0) {
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    p = std::max(q / qa, q != 0.0 ? qc / q : -std::numeric_limits<double>::infinity());
  }

  // Bracket for the safeguarded Newton polish: g decreases from +inf at p_floor.
  double lo = p_floor;
  double hi = std::max({s.w.p1, s.w.p2, 1.0});
  int guard = 0;
  while (g(hi) > 0.0) {
    hi = p_floor + 2.0 * (hi - p_floor);
    if (++guard > 2000) relax_failure(u, "no admissible root");
  }
  if (!(p > lo && p <= hi)) p = 0.5 * (lo + hi);

  int it = 0;
  for (; it < 200; ++it) {
    const double gp = g(p);
    if (gp == 0.0) break;
    if (gp > 0.0) lo = p;
    else hi = p;
    double next = p - gp / dg(p);
    if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
    const double step = std::fabs(next - p);
    p = next;
    if (step <= 4e-16 * std::fabs(p - p_floor) || hi - lo <= 4e-16 * std::fabs(hi - p_floor)) break;
  }
  if (!std::isfinite(p) || !(p > p_floor)) relax_failure(u, "no admissible root");

  const double m1 = u[slot::mass1];
  const double alpha1 = a1.alpha(p);
  if (!(alpha1 > 0.0 && alpha1 < 1.0)) relax_failure(u, "volume fraction leaves (0,1)");
  const double e1 = s.e1 - p * (alpha1 / m1 - s.w.alpha1 / m1);
  const double e_mix = u[slot::energy1] + u[slot::energy2];

  TwoPhaseCons& r = out.state;
  r[slot::alpha1] = alpha1;
  r[slot::energy1] = m1 * (e1 + 0.5 * s.w.u1 * s.w.u1);
  r[slot::energy2] = e_mix - r[slot::energy1];

  const TwoPhasePrim w = tp_prim_from_cons(r, eos);
  out.report.p_eq = p;
  out.report.iterations = it + 1;
  out.report.residual = pressure_residual(w.p1, w.p2);
  out.report.conservation_defect =
      std::fabs(r[slot::energy1] + r[slot::energy2] - e_mix) / std::fabs(e_mix);
  if (out.report.residual > 1e-8) relax_failure(u, "equilibrium residual above tolerance");
  return out;
}

TwoPhaseCons velocity_relax(const TwoPhaseCons& u, double lambda, double dt) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("velocity relaxation needs lambda >= 0");
  const double m1 = u[slot::mass1];
  const double m2 = u[slot::mass2];
  const double u1 = u[slot::mom1] / m1;
  const double u2 = u[slot::mom2] / m2;
  const double du = u2 - u1;
  if (lambda == 0.0 || dt == 0.0 || du == 0.0) return u;

  const double mom = u[slot::mom1] + u[slot::mom2];
  const double mass = m1 + m2;
  const double du_new = du * std::exp(-lambda * dt * (1.0 / m1 + 1.0 / m2));
  const double u1_new = mom / mass - m2 / mass * du_new;
  const double e_mix = u[slot::energy1] + u[slot::energy2];

  TwoPhaseCons r = u;
  r[slot::mom1] = m1 * u1_new;
  r[slot::mom2] = mom - r[slot::mom1];
  r[slot::energy1] = u[slot::energy1] + 0.5 * m1 * (u1_new * u1_new - u1 * u1);
  r[slot::energy2] = e_mix - r[slot::energy1];
  return r;
}

double clift_gauvin_cd(double reynolds) {
  if (!(reynolds > 0.0)) throw std::invalid_argument("Reynolds number must be positive");
  // 24 (1 + 0.15 Re^0.687) / Re written so that Re = 1 rounds to 27.6.
  if (reynolds < 800.0) return (24.0 + 3.6 * std::pow(reynolds, 0.687)) / reynolds;
  return 0.438;
}

namespace {

// Force per unit velocity difference, F = k (u2 - u1).
double drag_rate(const TwoPhasePrim& w, double radius, double mu2) {
  const double du = std::fabs(w.u2 - w.u1);
  if (du == 0.0) return 0.0;
  const double re = 2.0 * radius * w.rho2 * du / mu2;
  return 3.0 * w.alpha1 * clift_gauvin_cd(re) * w.rho2 * du / (8.0 * radius);
}

void check_drag_params(double radius, double mu2) {
  if (!(radius > 0.0)) throw std::invalid_argument("drag needs a positive particle radius");
  if (!(mu2 > 0.0)) throw std::invalid_argument("drag needs a positive carrier viscosity");
}

}  // namespace

double clift_gauvin_force(const TwoPhasePrim& w, double radius, double mu2) {
  check_drag_params(radius, mu2);
  return drag_rate(w, radius, mu2) * (w.u2 - w.u1);
}

TwoPhaseCons drag_clift_gauvin(const TwoPhaseCons& u, const TwoPhaseEos& eos, double radius,
                               double mu2, double dt) {
  check_drag_params(radius, mu2);
  TwoPhaseCons r = u;
  double remaining = dt;
  for (int sub = 0; remaining > 0.0; ++sub) {
    const TwoPhasePrim w = tp_prim_from_cons(r, eos);
    const double k = drag_rate(w, radius, mu2);
    if (k == 0.0) break;
    const double rate = k * (1.0 / r[slot::mass1] + 1.0 / r[slot::mass2]);
    // Keep the frozen coefficient accurate: Delta u may shrink by at most e^-0.5 per
    // sub-step. After 1000 sub-steps the remainder is taken in one exponential step.
    const double h = sub < 1000 ? std::min(remaining, 0.5 / rate) : remaining;
    r = velocity_relax(r, k, h);
    remaining -= h;
  }
  return r;
}

}  // namespace rsir
