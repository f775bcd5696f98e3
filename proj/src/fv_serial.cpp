#include <cmath>
#include <stdexcept>

#include "fv_kernels.hpp"

namespace rsir {

namespace {

struct SerialLoop {
  template <class F>
  void operator()(std::size_t n, F&& f) const {
    for (std::size_t i = 0; i < n; ++i) f(i);
  }
};

}  // namespace

std::string_view to_string(Boundary b) {
  switch (b) {
    case Boundary::transmissive: return "transmissive";
    case Boundary::reflective: return "reflective";
    case Boundary::periodic: return "periodic";
  }
  return "?";
}

std::string_view to_string(Limiter l) { return l == Limiter::minmod ? "minmod" : "none"; }

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::fabs(a) < std::fabs(b) ? a : b;
}

StepResult<EulerCons> muscl_step(const EulerModel& model, std::span<const EulerCons> cells,
                                 const Mesh1D& mesh, Boundary boundary, Limiter limiter,
                                 double dt, Exec exec) {
  if (exec == Exec::parallel)
    return detail::muscl_step_parallel(model, cells, mesh, boundary, limiter, dt);
  return detail::muscl_step_impl(model, cells, mesh, boundary, limiter, dt, SerialLoop{});
}

StepResult<TwoPhaseCons> muscl_step(const TwoPhaseModel& model,
                                    std::span<const TwoPhaseCons> cells, const Mesh1D& mesh,
                                    Boundary boundary, Limiter limiter, double dt, Exec exec) {
  if (exec == Exec::parallel)
    return detail::muscl_step_parallel(model, cells, mesh, boundary, limiter, dt);
  return detail::muscl_step_impl(model, cells, mesh, boundary, limiter, dt, SerialLoop{});
}

double max_signal_speed(const EulerModel& model, std::span<const EulerCons> cells, Exec exec) {
  if (exec == Exec::parallel) return detail::max_signal_speed_parallel(model, cells);
  return detail::max_speed_impl(model, cells, SerialLoop{});
}

double max_signal_speed(const TwoPhaseModel& model, std::span<const TwoPhaseCons> cells,
                        Exec exec) {
  if (exec == Exec::parallel) return detail::max_signal_speed_parallel(model, cells);
  return detail::max_speed_impl(model, cells, SerialLoop{});
}

double cfl_dt(double max_speed, double dx, double cfl) {
  if (!(max_speed > 0.0) || !std::isfinite(max_speed))
    throw std::domain_error("no positive wave speed to set the time step");
  return cfl * dx / max_speed;
}

bool clip_to_output(double t, double t_out, double& dt) {
  if (t + dt >= t_out) {
    dt = t_out - t;
    return true;
  }
  return false;
}

}  // namespace rsir
