#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsir/case_config.hpp"

namespace rsir {

/// Cell-centred snapshot. Columns: x then rho, u, p, e (Euler) or alpha1, rho1, u1, p1,
/// rho2, u2, p2, rho_mix (two-phase).
struct SnapshotTable {
  double time = 0.0;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // data[column][row]

  std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
  const std::vector<double>& column(const std::string& name) const;
};

struct RunManifest {
  std::string case_name;
  std::string description;
  std::string model;
  std::string solver;
  double beta = 0.0;
  double cfl = 0.0;
  std::string limiter;
  std::string boundary;
  std::size_t cells = 0;
  double x_min = 0.0, x_max = 0.0, x_disc = 0.0;
  double t_end = 0.0;
  std::vector<double> output_times;
  std::size_t steps = 0;
  double wall_time_s = 0.0;
  std::size_t rsir_fallbacks = 0;
  std::size_t alpha_clamps = 0;
  std::size_t dt_rejections = 0;
  double relax_max_residual = 0.0;
  double relax_max_energy_defect = 0.0;
  /// Largest per-step relative defect of each conserved quantity.
  std::map<std::string, double> conservation_defects;
  std::vector<std::string> files;
};

struct RunResult {
  CaseConfig config;  // validated copy
  RunManifest manifest;
  std::vector<SnapshotTable> snapshots;  // one per output time
};

struct RunOptions {
  Exec exec = Exec::serial;
};

/// Integrates the case to its end time. Step failures are retried once with half the
/// time step; a second failure propagates as StepError with the time in the message.
RunResult run(const CaseConfig& config, const RunOptions& options = {});

/// Sampled initial snapshot (t = 0) of a case, on its own mesh.
SnapshotTable initial_snapshot(const CaseConfig& config);

}  // namespace rsir
