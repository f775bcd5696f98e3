#include "rsir/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "fv_kernels.hpp"
#include "rsir/errors.hpp"
#include "rsir/relaxation.hpp"

namespace rsir {

const std::vector<double>& SnapshotTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return data[k];
  throw std::out_of_range("snapshot has no column '" + name + "'");
}

namespace {

constexpr std::size_t kMaxSteps = 10'000'000;

// Conserved quantities audited per step, as 0/1 combinations of the state slots.
template <class Cons>
struct Audit;

template <>
struct Audit<EulerCons> {
  static std::vector<std::string> names() { return {"mass", "momentum", "energy"}; }
  static std::vector<double> values(const EulerCons& u) { return {u[0], u[1], u[2]}; }
};

template <>
struct Audit<TwoPhaseCons> {
  static std::vector<std::string> names() { return {"mass1", "mass2", "momentum", "energy"}; }
  static std::vector<double> values(const TwoPhaseCons& u) {
    return {u[slot::mass1], u[slot::mass2], u[slot::mom1] + u[slot::mom2],
            u[slot::energy1] + u[slot::energy2]};
  }
};

template <class Cons>
Cons abs_state(const Cons& u) {
  Cons a = u;
  for (double& x : a.v) x = std::fabs(x);
  return a;
}

SnapshotTable snapshot(const EulerModel& m, const Mesh1D& mesh, std::span<const EulerCons> u,
                       double t) {
  SnapshotTable s;
  s.time = t;
  s.columns = {"x", "rho", "u", "p", "e"};
  s.data.assign(s.columns.size(), std::vector<double>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    const EulerPrim w = prim_from_cons(u[i], m.eos);
    s.data[0][i] = mesh.center(i);
    s.data[1][i] = w.rho;
    s.data[2][i] = w.u;
    s.data[3][i] = w.p;
    s.data[4][i] = internal_energy(m.eos, w.rho, w.p);
  }
  return s;
}

SnapshotTable snapshot(const TwoPhaseModel& m, const Mesh1D& mesh,
                       std::span<const TwoPhaseCons> u, double t) {
  SnapshotTable s;
  s.time = t;
  s.columns = {"x", "alpha1", "rho1", "u1", "p1", "rho2", "u2", "p2", "rho_mix"};
  s.data.assign(s.columns.size(), std::vector<double>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    const TwoPhasePrim w = tp_prim_from_cons(u[i], m.eos);
    const double row[] = {mesh.center(i), w.alpha1, w.rho1, w.u1, w.p1, w.rho2, w.u2, w.p2,
                          w.alpha1 * w.rho1 + w.alpha2() * w.rho2};
    for (std::size_t k = 0; k < s.columns.size(); ++k) s.data[k][i] = row[k];
  }
  return s;
}

std::vector<EulerCons> initial_cells(const CaseConfig& c, const EulerModel& m) {
  std::vector<EulerCons> u(c.mesh.n_cells);
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] = cons_from_prim(c.mesh.center(i) < c.x_disc ? c.euler_left : c.euler_right, m.eos);
  return u;
}

std::vector<TwoPhaseCons> initial_cells(const CaseConfig& c, const TwoPhaseModel& m) {
  std::vector<TwoPhaseCons> u(c.mesh.n_cells);
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] = tp_cons_from_prim(c.mesh.center(i) < c.x_disc ? c.tp_left : c.tp_right, m.eos);
  return u;
}

struct SourceStats {
  double residual = 0.0;
  double energy_defect = 0.0;
};

SourceStats apply_sources(const EulerModel&, const RelaxConfig&, std::vector<EulerCons>&,
                          double, Exec) {
  return {};
}

SourceStats apply_sources(const TwoPhaseModel& m, const RelaxConfig& relax,
                          std::vector<TwoPhaseCons>& u, double dt, Exec exec) {
  std::vector<RelaxReport> reports(u.size());
  detail::for_each_index(u.size(), exec, [&](std::size_t i) {
    if (relax.drag == DragKind::constant) u[i] = velocity_relax(u[i], relax.lambda, dt);
    else if (relax.drag == DragKind::clift_gauvin)
      u[i] = drag_clift_gauvin(u[i], m.eos, relax.radius, relax.mu2, dt);
    if (relax.pressure) {
      const RelaxResult r = pressure_relax_stiff(u[i], m.eos);
      u[i] = r.state;
      reports[i] = r.report;
    }
  });
  SourceStats s;
  for (const RelaxReport& r : reports) {
    s.residual = std::max(s.residual, r.residual);
    s.energy_defect = std::max(s.energy_defect, r.conservation_defect);
  }
  return s;
}

std::string format_time(double t) {
  std::ostringstream os;
  os.precision(9);
  os << "t = " << t << " s";
  return os.str();
}

template <class Model>
RunResult run_model(const CaseConfig& cfg, const Model& model, const RunOptions& opt) {
  using Cons = typename Model::Cons;
  const auto start = std::chrono::steady_clock::now();
  const Mesh1D& mesh = cfg.mesh;
  const double dx = mesh.dx();

  RunResult result;
  result.config = cfg;
  RunManifest& man = result.manifest;
  man.case_name = cfg.name;
  man.description = cfg.description;
  man.model = cfg.model == ModelKind::euler ? "euler" : "two-phase";
  man.solver = cfg.solver;
  man.beta = cfg.beta;
  man.cfl = cfg.cfl;
  man.limiter = std::string(to_string(cfg.limiter));
  man.boundary = std::string(to_string(cfg.boundary));
  man.cells = mesh.n_cells;
  man.x_min = mesh.x_min;
  man.x_max = mesh.x_max;
  man.x_disc = cfg.x_disc;
  man.t_end = cfg.t_end;
  man.output_times = cfg.outputs;

  const std::vector<std::string> names = Audit<Cons>::names();
  for (const auto& n : names) man.conservation_defects[n] = 0.0;

  std::vector<Cons> u = initial_cells(cfg, model);
  double t = 0.0;
  std::size_t next = 0;
  while (next < cfg.outputs.size() && cfg.outputs[next] <= 0.0) {
    result.snapshots.push_back(snapshot(model, mesh, u, 0.0));
    ++next;
  }

  while (next < cfg.outputs.size()) {
    if (man.steps >= kMaxSteps) throw StepError("step limit reached at " + format_time(t), 0);
    double dt = cfl_dt(max_signal_speed(model, u, opt.exec), dx, cfg.cfl);
    bool lands = clip_to_output(t, cfg.outputs[next], dt);

    StepResult<Cons> step;
    SourceStats sources;
    for (int attempt = 0;; ++attempt) {
      try {
        step = muscl_step(model, u, mesh, cfg.boundary, cfg.limiter, dt, opt.exec);
        sources = apply_sources(model, cfg.relax, step.cells, dt, opt.exec);
        break;
      } catch (const StepError& e) {
        if (attempt > 0) throw StepError::with_context(e, "step rejected twice at " + format_time(t));
        ++man.dt_rejections;
        dt *= 0.5;
        lands = false;
      }
    }

    // Relative conservation defect of the whole step, boundary fluxes included.
    std::vector<double> before(names.size(), 0.0), after(names.size(), 0.0),
        scale(names.size(), 0.0);
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto a = Audit<Cons>::values(u[i]);
      const auto b = Audit<Cons>::values(step.cells[i]);
      const auto m = Audit<Cons>::values(abs_state(u[i]));
      for (std::size_t k = 0; k < names.size(); ++k) {
        before[k] += a[k];
        after[k] += b[k];
        scale[k] += m[k];
      }
    }
    const auto fl = Audit<Cons>::values(step.flux_left);
    const auto fr = Audit<Cons>::values(step.flux_right);
    const auto fs = Audit<Cons>::values(step.flux_abs_sum);
    for (std::size_t k = 0; k < names.size(); ++k) {
      const double defect = std::fabs(after[k] - before[k] + dt / dx * (fr[k] - fl[k]));
      const double denom = scale[k] + dt / dx * fs[k];
      double& slot = man.conservation_defects[names[k]];
      if (denom > 0.0) slot = std::max(slot, defect / denom);
    }

    man.rsir_fallbacks += step.fallbacks;
    man.alpha_clamps += step.alpha_clamps;
    man.relax_max_residual = std::max(man.relax_max_residual, sources.residual);
    man.relax_max_energy_defect = std::max(man.relax_max_energy_defect, sources.energy_defect);
    u = std::move(step.cells);
    ++man.steps;
    t = lands ? cfg.outputs[next] : t + dt;
    if (lands) {
      result.snapshots.push_back(snapshot(model, mesh, u, t));
      ++next;
    }
  }

  man.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

EulerModel euler_model(const CaseConfig& c) {
  return {c.eos, parse_euler_solver(c.solver), c.beta};
}

TwoPhaseModel two_phase_model(const CaseConfig& c) {
  return {c.tp_eos, parse_two_phase_solver(c.solver), c.beta};
}

}  // namespace

RunResult run(const CaseConfig& config, const RunOptions& options) {
  CaseConfig c = config;
  c.validate();
  if (c.model == ModelKind::euler) return run_model(c, euler_model(c), options);
  return run_model(c, two_phase_model(c), options);
}

SnapshotTable initial_snapshot(const CaseConfig& config) {
  CaseConfig c = config;
  c.validate();
  if (c.model == ModelKind::euler) {
    const EulerModel m = euler_model(c);
    return snapshot(m, c.mesh, initial_cells(c, m), 0.0);
  }
  const TwoPhaseModel m = two_phase_model(c);
  return snapshot(m, c.mesh, initial_cells(c, m), 0.0);
}

}  // namespace rsir
