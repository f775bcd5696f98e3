#pragma once
// Per-cell and per-face kernels shared by the serial and OpenMP step orchestrations.

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "rsir/errors.hpp"
#include "rsir/fv.hpp"

namespace rsir::detail {

struct FaceData {
  double alpha_face = 0.0;
  double alpha_flux_face = 0.0;
  bool fallback = false;
};

template <class Model>
struct Traits;

template <>
struct Traits<EulerModel> {
  static constexpr std::size_t kPrim = 3;
  using Vec = std::array<double, kPrim>;

  static Vec to_vec(const EulerPrim& w) { return {w.rho, w.u, w.p}; }
  static EulerPrim from_vec(const Vec& v) { return {v[0], v[1], v[2]}; }
  static EulerPrim prim(const EulerModel& m, const EulerCons& u, bool& clamped) {
    clamped = false;
    return prim_from_cons(u, m.eos);
  }
  static EulerCons cons(const EulerModel& m, const EulerPrim& w) {
    return cons_from_prim(w, m.eos);
  }
  static EulerCons predictor_flux(const EulerModel& m, const EulerPrim& w, const EulerPrim&) {
    return physical_flux(w, m.eos);
  }
  static EulerCons face_flux(const EulerModel& m, const EulerPrim& wl, const EulerPrim& wr,
                             FaceData&) {
    return euler_interface_flux(m.solver, wl, wr, m.eos, m.beta);
  }
  static void add_h(const EulerModel&, EulerCons&, const EulerPrim&, const FaceData&,
                    const FaceData&, double, double) {}
  static bool clamp_alpha(EulerCons&) { return false; }
  static double speed(const EulerModel& m, const EulerPrim& w) {
    return max_wave_speed(w, m.eos);
  }
};

template <>
struct Traits<TwoPhaseModel> {
  static constexpr std::size_t kPrim = 7;
  using Vec = std::array<double, kPrim>;

  static Vec to_vec(const TwoPhasePrim& w) {
    return {w.alpha1, w.rho1, w.u1, w.p1, w.rho2, w.u2, w.p2};
  }
  static TwoPhasePrim from_vec(const Vec& v) {
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
  }
  static TwoPhasePrim prim(const TwoPhaseModel& m, const TwoPhaseCons& u, bool& clamped) {
    return tp_prim_from_cons(u, m.eos, &clamped);
  }
  static TwoPhaseCons cons(const TwoPhaseModel& m, const TwoPhasePrim& w) {
    return tp_cons_from_prim(w, m.eos);
  }
  // Locally conservative flux with p_I frozen to the cell's dispersed-phase pressure.
  static TwoPhaseCons predictor_flux(const TwoPhaseModel& m, const TwoPhasePrim& w,
                                     const TwoPhasePrim& cell) {
    return drop_alpha2(local_flux(w, cell.p1, m.eos));
  }
  static TwoPhaseCons face_flux(const TwoPhaseModel& m, const TwoPhasePrim& wl,
                                const TwoPhasePrim& wr, FaceData& face) {
    const TwoPhaseFan fan = tp_interface_flux(m.solver, wl, wr, m.eos, m.beta);
    face.alpha_face = fan.alpha_face;
    face.alpha_flux_face = fan.alpha_flux_face;
    face.fallback = fan.fallback;
    return fan.flux;
  }
  static void add_h(const TwoPhaseModel&, TwoPhaseCons& u, const TwoPhasePrim& cell,
                    const FaceData& left, const FaceData& right, double dx, double dt) {
    apply_h_terms(u,
                  h_terms(left.alpha_face, right.alpha_face, left.alpha_flux_face,
                          right.alpha_flux_face, cell.p1, dx),
                  dt);
  }
  static bool clamp_alpha(TwoPhaseCons& u) {
    const double a = u[slot::alpha1];
    const double c = std::clamp(a, kAlphaFloor, 1.0 - kAlphaFloor);
    if (c == a) return false;
    u[slot::alpha1] = c;
    return true;
  }
  static double speed(const TwoPhaseModel& m, const TwoPhasePrim& w) {
    return max_wave_speed(w, m.eos);
  }
};

/// Runs f(i) for i in [0, n). Any exception is rethrown after the loop as a StepError
/// for the lowest failing index, so serial and parallel loops fail identically.
struct ErrorSlot {
  std::size_t index = static_cast<std::size_t>(-1);
  std::exception_ptr error;

  void record(std::size_t i, std::exception_ptr e) {
    if (i < index) {
      index = i;
      error = e;
    }
  }
  void rethrow() const {
    if (error) std::rethrow_exception(error);
  }
};

template <class F>
void guarded(std::size_t cell, F&& f) {
  try {
    f();
  } catch (const StepError&) {
    throw;
  } catch (const std::exception& e) {
    throw StepError(e.what(), cell);
  }
}

// Interior index of a padded index, clipped to the interior range.
inline std::size_t interior_index(std::size_t padded, std::size_t n) {
  if (padded < kGhost) return 0;
  return std::min(padded - kGhost, n - 1);
}

template <class Model, class Loop>
StepResult<typename Model::Cons> muscl_step_impl(const Model& model,
                                                 std::span<const typename Model::Cons> cells,
                                                 const Mesh1D& mesh, Boundary boundary,
                                                 Limiter limiter, double dt, Loop&& loop) {
  using Cons = typename Model::Cons;
  using Prim = typename Model::Prim;
  using T = Traits<Model>;
  const std::size_t n = cells.size();
  const std::size_t np = n + 2 * kGhost;
  const double dx = mesh.dx();
  const double half = 0.5 * dt / dx;

  std::vector<Cons> u(np);
  std::copy(cells.begin(), cells.end(), u.begin() + kGhost);
  apply_boundary(std::span<Cons>(u), boundary);

  std::vector<Prim> w(np);
  std::vector<char> clamped(np, 0);
  loop(np, [&](std::size_t i) {
    guarded(interior_index(i, n), [&] {
      bool c = false;
      w[i] = T::prim(model, u[i], c);
      clamped[i] = c;
    });
  });

  // Hancock predictor: extrapolated states at the left (minus) and right (plus) faces,
  // advanced by half a step.
  std::vector<Prim> w_minus(np), w_plus(np);
  loop(np - 2, [&](std::size_t j) {
    const std::size_t i = j + 1;
    guarded(interior_index(i, n), [&] {
      const auto a = T::to_vec(w[i - 1]);
      const auto b = T::to_vec(w[i]);
      const auto c = T::to_vec(w[i + 1]);
      typename T::Vec lo, hi;
      for (std::size_t k = 0; k < T::kPrim; ++k) {
        const double slope = limiter == Limiter::minmod ? minmod(b[k] - a[k], c[k] - b[k]) : 0.0;
        lo[k] = b[k] - 0.5 * slope;
        hi[k] = b[k] + 0.5 * slope;
      }
      const Prim wl = T::from_vec(lo);
      const Prim wr = T::from_vec(hi);
      const Cons fl = T::predictor_flux(model, wl, w[i]);
      const Cons fr = T::predictor_flux(model, wr, w[i]);
      Cons ul = T::cons(model, wl);
      Cons ur = T::cons(model, wr);
      for (std::size_t k = 0; k < ul.v.size(); ++k) {
        const double d = half * (fl[k] - fr[k]);
        ul[k] += d;
        ur[k] += d;
      }
      bool ignored = false;
      w_minus[i] = T::prim(model, ul, ignored);
      w_plus[i] = T::prim(model, ur, ignored);
    });
  });

  // Face f sits between padded cells f + 1 and f + 2; faces 0 and n bound the interior.
  std::vector<Cons> flux(n + 1);
  std::vector<FaceData> face(n + 1);
  loop(n + 1, [&](std::size_t f) {
    guarded(f == 0 ? 0 : f - 1, [&] {
      flux[f] = T::face_flux(model, w_plus[f + 1], w_minus[f + 2], face[f]);
    });
  });

  StepResult<Cons> out;
  out.cells.resize(n);
  std::vector<char> floored(n, 0);
  loop(n, [&](std::size_t c) {
    guarded(c, [&] {
      const std::size_t i = c + kGhost;
      Cons next = u[i];
      for (std::size_t k = 0; k < next.v.size(); ++k) next[k] -= dt / dx * (flux[c + 1][k] - flux[c][k]);
      T::add_h(model, next, w[i], face[c], face[c + 1], dx, dt);
      floored[c] = T::clamp_alpha(next);
      bool ignored = false;
      T::prim(model, next, ignored);
      out.cells[c] = next;
    });
  });

  out.flux_left = flux.front();
  out.flux_right = flux.back();
  for (std::size_t f = 0; f <= n; ++f) {
    for (std::size_t k = 0; k < out.flux_abs_sum.v.size(); ++k)
      out.flux_abs_sum[k] += std::fabs(flux[f][k]);
    out.fallbacks += face[f].fallback ? 1 : 0;
  }
  for (std::size_t c = 0; c < n; ++c)
    out.alpha_clamps += (clamped[c + kGhost] ? 1 : 0) + (floored[c] ? 1 : 0);
  return out;
}

template <class Model, class Loop>
double max_speed_impl(const Model& model, std::span<const typename Model::Cons> cells,
                      Loop&& loop) {
  std::vector<double> s(cells.size());
  loop(cells.size(), [&](std::size_t i) {
    guarded(i, [&] {
      bool ignored = false;
      s[i] = Traits<Model>::speed(model, Traits<Model>::prim(model, cells[i], ignored));
    });
  });
  return s.empty() ? 0.0 : *std::max_element(s.begin(), s.end());
}

}  // namespace rsir::detail

namespace rsir::detail {

StepResult<EulerCons> muscl_step_parallel(const EulerModel& model,
                                          std::span<const EulerCons> cells, const Mesh1D& mesh,
                                          Boundary boundary, Limiter limiter, double dt);
StepResult<TwoPhaseCons> muscl_step_parallel(const TwoPhaseModel& model,
                                             std::span<const TwoPhaseCons> cells,
                                             const Mesh1D& mesh, Boundary boundary,
                                             Limiter limiter, double dt);
double max_signal_speed_parallel(const EulerModel& model, std::span<const EulerCons> cells);
double max_signal_speed_parallel(const TwoPhaseModel& model,
                                 std::span<const TwoPhaseCons> cells);

}  // namespace rsir::detail

namespace rsir::detail {

/// f(i) for i in [0, n) with serial or OpenMP loops; exceptions become StepError(i) and
/// the lowest failing index wins.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& f);

}  // namespace rsir::detail
