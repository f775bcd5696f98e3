// Serial reference kernels against the OpenMP kernels for one MUSCL-Hancock step.
#include <benchmark/benchmark.h>

#include "rsir/fv.hpp"

using namespace rsir;

namespace {

std::vector<EulerCons> sod(std::size_t n, const EosParams& eos) {
  std::vector<EulerCons> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = cons_from_prim(i < n / 2 ? EulerPrim{1.0, 0.0, 1e5} : EulerPrim{0.125, 0.0, 1e4}, eos);
  return u;
}

std::vector<TwoPhaseCons> droplets(std::size_t n, const TwoPhaseEos& eos) {
  std::vector<TwoPhaseCons> u(n);
  const TwoPhasePrim hi{0.01, 1000.0, 0.0, 1e6, 10.0, 0.0, 1e6};
  const TwoPhasePrim lo{0.01, 1000.0, 0.0, 1e5, 1.0, 0.0, 1e5};
  for (std::size_t i = 0; i < n; ++i) u[i] = tp_cons_from_prim(i < n / 2 ? hi : lo, eos);
  return u;
}

void euler_step(benchmark::State& state, Exec exec) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const EulerModel model{EosParams::ideal(1.4), EulerSolver::rsir, 1.0};
  const Mesh1D mesh{0.0, 1.0, n};
  const auto u = sod(n, model.eos);
  const double dt = cfl_dt(max_signal_speed(model, u), mesh.dx(), 0.5);
  for (auto _ : state) {
    auto r = muscl_step(model, u, mesh, Boundary::transmissive, Limiter::minmod, dt, exec);
    benchmark::DoNotOptimize(r.cells.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}

void two_phase_step(benchmark::State& state, Exec exec) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const TwoPhaseModel model{{EosParams::stiffened(4.4, 6e8), EosParams::ideal(1.4)},
                            TwoPhaseSolver::rsir, 1.0};
  const Mesh1D mesh{0.0, 1.0, n};
  const auto u = droplets(n, model.eos);
  const double dt = cfl_dt(max_signal_speed(model, u), mesh.dx(), 0.5);
  for (auto _ : state) {
    auto r = muscl_step(model, u, mesh, Boundary::transmissive, Limiter::minmod, dt, exec);
    benchmark::DoNotOptimize(r.cells.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK_CAPTURE(euler_step, serial, Exec::serial)->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(euler_step, openmp, Exec::parallel)->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(two_phase_step, serial, Exec::serial)->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(two_phase_step, openmp, Exec::parallel)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
