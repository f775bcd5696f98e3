#include "rsir/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsir/errors.hpp"

namespace rsir {

namespace {

constexpr int kMaxIterations = 100;

// Density written in the shifted specific volume v - b.
double shifted_density(const EosParams& eos, double rho) { return 1.0 / (1.0 / rho - eos.b); }
double unshifted_density(const EosParams& eos, double rho_shifted) {
  return 1.0 / (1.0 / rho_shifted + eos.b);
}

}  // namespace

double ExactSolution::pressure_function(double p, bool left_side) const {
  const EulerPrim& w = left_side ? wl_ : wr_;
  const double g = eos_.gamma;
  const double rho_s = shifted_density(eos_, w.rho);
  const double pk = w.p + eos_.p_inf;
  const double pp = p + eos_.p_inf;
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * rho_s);
    const double b = (g - 1.0) / (g + 1.0) * pk;
    return (p - w.p) * std::sqrt(a / (pp + b));
  }
  const double c = std::sqrt(g * pk / rho_s);
  return 2.0 * c / (g - 1.0) * (std::pow(pp / pk, (g - 1.0) / (2.0 * g)) - 1.0);
}

double ExactSolution::pressure_function_derivative(double p, bool left_side) const {
  const EulerPrim& w = left_side ? wl_ : wr_;
  const double g = eos_.gamma;
  const double rho_s = shifted_density(eos_, w.rho);
  const double pk = w.p + eos_.p_inf;
  const double pp = p + eos_.p_inf;
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * rho_s);
    const double b = (g - 1.0) / (g + 1.0) * pk;
    return std::sqrt(a / (pp + b)) * (1.0 - 0.5 * (p - w.p) / (pp + b));
  }
  const double c = std::sqrt(g * pk / rho_s);
  return 1.0 / (rho_s * c) * std::pow(pp / pk, -(g + 1.0) / (2.0 * g));
}

ExactSolution::ExactSolution(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos)
    : wl_(wl), wr_(wr), eos_(eos) {
  check_admissible(eos, wl.rho, wl.p);
  check_admissible(eos, wr.rho, wr.p);
  const double g = eos.gamma;
  const double pinf = eos.p_inf;
  const double pl = wl.p + pinf;
  const double pr = wr.p + pinf;
  const double cl = std::sqrt(g * pl / shifted_density(eos, wl.rho));
  const double cr = std::sqrt(g * pr / shifted_density(eos, wr.rho));
  const double du = wr.u - wl.u;

  if (2.0 * (cl + cr) / (g - 1.0) <= du) {
    std::ostringstream msg;
    msg << "initial data generate vacuum (u_R - u_L = " << du << ")";
    throw VacuumError(msg.str());
  }

  auto f = [&](double p) {
    return pressure_function(p, true) + pressure_function(p, false) + du;
  };
  auto df = [&](double p) {
    return pressure_function_derivative(p, true) + pressure_function_derivative(p, false);
  };

  // Two-rarefaction estimate in shifted pressure.
  const double z = (g - 1.0) / (2.0 * g);
  const double num = cl + cr - 0.5 * (g - 1.0) * du;
  double p = std::pow(num / (cl / std::pow(pl, z) + cr / std::pow(pr, z)), 1.0 / z) - pinf;

  // Bracket: f is increasing in p and f(-p_inf) < 0 without vacuum.
  double lo = -pinf;
  double hi = std::max({p, wl.p, wr.p});
  while (f(hi) < 0.0) hi = 2.0 * (hi + pinf) - pinf;
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  const double scale = cl + cr;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    const double fp = f(p);
    if (fp == 0.0) break;
    if (fp < 0.0) lo = p;
    else hi = p;
    double next = p - fp / df(p);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double change = std::fabs(next - p) / (next + pinf);
    p = next;
    if (change < 1e-15 && std::fabs(f(p)) <= 1e-12 * scale) break;
  }
  iterations_ = it + 1;
  residual_ = std::fabs(f(p)) / scale;
  if (residual_ > 1e-10) throw ConvergenceError("exact Riemann solver did not converge", residual_);

  p_star_ = p;
  u_star_ = 0.5 * (wl.u + wr.u) + 0.5 * (pressure_function(p, false) - pressure_function(p, true));

  auto star_density = [&](const EulerPrim& w, WaveKind& kind) {
    const double rho_s = shifted_density(eos, w.rho);
    const double ratio = (p + pinf) / (w.p + pinf);
    double rho_star_s;
    if (p > w.p) {
      kind = WaveKind::shock;
      const double gm = (g - 1.0) / (g + 1.0);
      rho_star_s = rho_s * (ratio + gm) / (gm * ratio + 1.0);
    } else {
      kind = WaveKind::rarefaction;
      rho_star_s = rho_s * std::pow(ratio, 1.0 / g);
    }
    return unshifted_density(eos, rho_star_s);
  };
  rho_star_l_ = star_density(wl, left_wave_);
  rho_star_r_ = star_density(wr, right_wave_);
}

ExactSolution solve_exact(const EulerPrim& wl, const EulerPrim& wr, const EosParams& eos) {
  return ExactSolution(wl, wr, eos);
}

double ExactSolution::left_head_speed() const {
  if (left_wave_ == WaveKind::shock) return left_tail_speed();
  return wl_.u - sound_speed(eos_, wl_.rho, wl_.p);
}

double ExactSolution::right_head_speed() const {
  if (right_wave_ == WaveKind::shock) return right_tail_speed();
  return wr_.u + sound_speed(eos_, wr_.rho, wr_.p);
}

double ExactSolution::left_tail_speed() const {
  if (left_wave_ == WaveKind::shock) {
    // Mass flux through the shock from the Rankine-Hugoniot jump in specific volume.
    const double q = (p_star_ - wl_.p) / (1.0 / wl_.rho - 1.0 / rho_star_l_);
    return wl_.u - std::sqrt(q) / wl_.rho;
  }
  return u_star_ - sound_speed(eos_, rho_star_l_, p_star_);
}

double ExactSolution::right_tail_speed() const {
  if (right_wave_ == WaveKind::shock) {
    const double q = (p_star_ - wr_.p) / (1.0 / wr_.rho - 1.0 / rho_star_r_);
    return wr_.u + std::sqrt(q) / wr_.rho;
  }
  return u_star_ + sound_speed(eos_, rho_star_r_, p_star_);
}

EulerPrim ExactSolution::sample_side(double xi, bool left_side) const {
  const EulerPrim& w = left_side ? wl_ : wr_;
  const double rho_star = left_side ? rho_star_l_ : rho_star_r_;
  const EulerPrim star{rho_star, u_star_, p_star_};
  // Signed so that the outer state sits at sign*xi -> -infinity.
  const double sign = left_side ? 1.0 : -1.0;
  const double head = left_side ? left_head_speed() : right_head_speed();
  const double tail = left_side ? left_tail_speed() : right_tail_speed();
  if (sign * xi <= sign * head) return w;
  if (sign * xi >= sign * tail) return star;

  // Inside a rarefaction fan.
  const double g = eos_.gamma;
  const double pinf = eos_.p_inf;
  const double pk = w.p + pinf;
  const double rho_s = shifted_density(eos_, w.rho);
  if (!eos_.has_covolume()) {
    const double c = sound_speed(eos_, w.rho, w.p);
    const double cf = 2.0 / (g + 1.0) * (c + sign * 0.5 * (g - 1.0) * (w.u - xi));
    const double u = 2.0 / (g + 1.0) * (sign * c + 0.5 * (g - 1.0) * w.u + xi);
    const double rho = w.rho * std::pow(cf / c, 2.0 / (g - 1.0));
    const double p = pk * std::pow(cf / c, 2.0 * g / (g - 1.0)) - pinf;
    return {rho, u, p};
  }
  // Covolume: along the isentrope u = u_K -/+ f_K(p); solve u -/+ c = xi by bisection.
  auto state_at = [&](double p) {
    const double rho = unshifted_density(eos_, rho_s * std::pow((p + pinf) / pk, 1.0 / g));
    const double u = w.u - sign * pressure_function(p, left_side);
    return EulerPrim{rho, u, p};
  };
  double lo = p_star_, hi = w.p;
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * (hi + pinf); ++it) {
    const double mid = 0.5 * (lo + hi);
    const EulerPrim s = state_at(mid);
    const double speed = s.u - sign * sound_speed(eos_, s.rho, s.p);
    // speed decreases (left) / increases (right) with pressure.
    if (sign * (speed - xi) > 0.0) lo = mid;
    else hi = mid;
  }
  return state_at(0.5 * (lo + hi));
}

EulerPrim ExactSolution::sample(double xi) const {
  return xi <= u_star_ ? sample_side(xi, true) : sample_side(xi, false);
}

EulerPrim sample(const ExactSolution& sol, double xi) { return sol.sample(xi); }

double field_value(const EulerPrim& w, EulerField f, const EosParams& eos) {
  switch (f) {
    case EulerField::density: return w.rho;
    case EulerField::velocity: return w.u;
    case EulerField::pressure: return w.p;
    case EulerField::internal_energy: return internal_energy(eos, w.rho, w.p);
  }
  return 0.0;
}

double l1_error(std::span<const double> numerical, EulerField field, const ExactSolution& sol,
                double t, const Mesh1D& mesh, double x_disc) {
  if (!(t > 0.0)) throw std::invalid_argument("l1_error requires t > 0");
  if (numerical.size() != mesh.n_cells)
    throw std::invalid_argument("l1_error: field size does not match the mesh");
  double sum = 0.0;
  for (std::size_t i = 0; i < mesh.n_cells; ++i) {
    const EulerPrim w = sol.sample((mesh.center(i) - x_disc) / t);
    sum += std::fabs(numerical[i] - field_value(w, field, sol.eos()));
  }
  return sum * mesh.dx();
}

}  // namespace rsir
