#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rsir/euler.hpp"
#include "rsir/mesh.hpp"
#include "rsir/twophase.hpp"

namespace rsir {

enum class Boundary { transmissive, reflective, periodic };
enum class Limiter { minmod, none };
/// Serial reference loops or OpenMP loops; both give bit-identical results.
enum class Exec { serial, parallel };

std::string_view to_string(Boundary b);
std::string_view to_string(Limiter l);

/// 0 if ab <= 0, otherwise the argument of smaller magnitude.
double minmod(double a, double b);

/// Ghost layers on each side of the interior cells.
inline constexpr std::size_t kGhost = 2;

inline EulerCons reflect(const EulerCons& u) {
  EulerCons r = u;
  r[1] = -r[1];
  return r;
}

inline TwoPhaseCons reflect(const TwoPhaseCons& u) {
  TwoPhaseCons r = u;
  r[slot::mom1] = -r[slot::mom1];
  r[slot::mom2] = -r[slot::mom2];
  return r;
}

/// Fills the kGhost cells at both ends of `u` (interior = u[kGhost .. size - kGhost)).
template <class Cons>
void apply_boundary(std::span<Cons> u, Boundary kind) {
  const std::size_t n = u.size() - 2 * kGhost;
  for (std::size_t g = 0; g < kGhost; ++g) {
    Cons& left = u[kGhost - 1 - g];
    Cons& right = u[kGhost + n + g];
    switch (kind) {
      case Boundary::transmissive:
        left = u[kGhost];
        right = u[kGhost + n - 1];
        break;
      case Boundary::reflective:
        left = reflect(u[kGhost + g]);
        right = reflect(u[kGhost + n - 1 - g]);
        break;
      case Boundary::periodic:
        left = u[kGhost + n - 1 - g];
        right = u[kGhost + g];
        break;
    }
  }
}

struct EulerModel {
  using Cons = EulerCons;
  using Prim = EulerPrim;
  EosParams eos;
  EulerSolver solver = EulerSolver::rsir;
  double beta = 1.0;
};

struct TwoPhaseModel {
  using Cons = TwoPhaseCons;
  using Prim = TwoPhasePrim;
  TwoPhaseEos eos;
  TwoPhaseSolver solver = TwoPhaseSolver::rsir;
  double beta = 1.0;
};

template <class Cons>
struct StepResult {
  std::vector<Cons> cells;
  /// Fluxes through the outer faces of the first and last interior cells.
  Cons flux_left{};
  Cons flux_right{};
  /// Sum over all faces of |F|, the rounding scale of the update.
  Cons flux_abs_sum{};
  std::size_t fallbacks = 0;
  std::size_t alpha_clamps = 0;
};

/// One MUSCL-Hancock step on the interior cells. Primitive slopes are limited, the
/// half-step predictor uses the conservative part of the flux, and the corrector adds
/// the non-conservative cell terms for the two-phase model. Throws StepError carrying the
/// interior cell index.
StepResult<EulerCons> muscl_step(const EulerModel& model, std::span<const EulerCons> cells,
                                 const Mesh1D& mesh, Boundary boundary, Limiter limiter,
                                 double dt, Exec exec = Exec::serial);
StepResult<TwoPhaseCons> muscl_step(const TwoPhaseModel& model,
                                    std::span<const TwoPhaseCons> cells, const Mesh1D& mesh,
                                    Boundary boundary, Limiter limiter, double dt,
                                    Exec exec = Exec::serial);

/// Fastest signal speed over the cells: |u| + c, or max |eigenvalue| for two phases.
double max_signal_speed(const EulerModel& model, std::span<const EulerCons> cells,
                        Exec exec = Exec::serial);
double max_signal_speed(const TwoPhaseModel& model, std::span<const TwoPhaseCons> cells,
                        Exec exec = Exec::serial);

/// cfl * dx / max_speed; throws std::domain_error if max_speed is not positive.
double cfl_dt(double max_speed, double dx, double cfl);

/// Shortens dt so that t + dt does not pass t_out. Returns true when the step lands
/// on t_out, in which case the caller sets the time to t_out itself.
bool clip_to_output(double t, double t_out, double& dt);

}  // namespace rsir
