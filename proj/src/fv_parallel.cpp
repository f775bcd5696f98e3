#include "fv_kernels.hpp"

namespace rsir::detail {

namespace {

struct OmpLoop {
  template <class F>
  void operator()(std::size_t n, F&& f) const {
    ErrorSlot slot;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(rsir_step_error)
        slot.record(static_cast<std::size_t>(i), std::current_exception());
      }
    }
    slot.rethrow();
  }
};

}  // namespace

StepResult<EulerCons> muscl_step_parallel(const EulerModel& model,
                                          std::span<const EulerCons> cells, const Mesh1D& mesh,
                                          Boundary boundary, Limiter limiter, double dt) {
  return muscl_step_impl(model, cells, mesh, boundary, limiter, dt, OmpLoop{});
}

StepResult<TwoPhaseCons> muscl_step_parallel(const TwoPhaseModel& model,
                                             std::span<const TwoPhaseCons> cells,
                                             const Mesh1D& mesh, Boundary boundary,
                                             Limiter limiter, double dt) {
  return muscl_step_impl(model, cells, mesh, boundary, limiter, dt, OmpLoop{});
}

double max_signal_speed_parallel(const EulerModel& model, std::span<const EulerCons> cells) {
  return max_speed_impl(model, cells, OmpLoop{});
}

double max_signal_speed_parallel(const TwoPhaseModel& model,
                                 std::span<const TwoPhaseCons> cells) {
  return max_speed_impl(model, cells, OmpLoop{});
}

}  // namespace rsir::detail

namespace rsir::detail {

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& f) {
  auto body = [&](std::size_t i) { guarded(i, [&] { f(i); }); };
  if (exec == Exec::parallel) {
    OmpLoop{}(n, body);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace rsir::detail
