#include "rsir/compare.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "rsir/exact_riemann.hpp"

namespace rsir {

namespace {

std::vector<std::string> value_columns(const SnapshotTable& s) {
  return {s.columns.begin() + 1, s.columns.end()};
}

void add_convergence(ErrorTable& table) {
  std::map<std::string, std::vector<const ErrorRow*>> by_label;
  for (const ErrorRow& r : table.rows) by_label[r.label].push_back(&r);
  for (auto& [label, rows] : by_label) {
    std::sort(rows.begin(), rows.end(),
              [](const ErrorRow* a, const ErrorRow* b) { return a->cells < b->cells; });
    for (std::size_t k = 1; k < rows.size(); ++k) {
      if (rows[k]->cells == rows[k - 1]->cells) continue;
      ConvergenceRow c{label, rows[k - 1]->cells, rows[k]->cells, {}};
      for (const auto& f : table.fields) c.ratio[f] = rows[k - 1]->l1.at(f) / rows[k]->l1.at(f);
      table.convergence.push_back(c);
    }
  }
}

const SnapshotTable& final_snapshot(const RunResult& r) {
  if (r.snapshots.empty()) throw std::invalid_argument("run '" + r.manifest.case_name + "' has no snapshot");
  return r.snapshots.back();
}

}  // namespace

std::vector<double> block_average(const std::vector<double>& fine, std::size_t n_coarse) {
  if (n_coarse == 0 || fine.size() % n_coarse != 0)
    throw std::invalid_argument("reference cells (" + std::to_string(fine.size()) +
                                ") are not a multiple of " + std::to_string(n_coarse));
  const std::size_t r = fine.size() / n_coarse;
  std::vector<double> out(n_coarse, 0.0);
  for (std::size_t i = 0; i < n_coarse; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < r; ++k) s += fine[i * r + k];
    out[i] = s / static_cast<double>(r);
  }
  return out;
}

ErrorTable compare_exact(const std::vector<RunResult>& runs) {
  ErrorTable table;
  table.reference = "exact";
  table.fields = {"rho", "u", "p", "e"};
  const EulerField fields[] = {EulerField::density, EulerField::velocity, EulerField::pressure,
                               EulerField::internal_energy};
  for (const RunResult& run : runs) {
    const CaseConfig& c = run.config;
    if (c.model != ModelKind::euler)
      throw std::invalid_argument("the exact oracle only covers Euler runs ('" +
                                  run.manifest.case_name + "' is two-phase)");
    const SnapshotTable& s = final_snapshot(run);
    if (!(s.time > 0.0)) throw std::invalid_argument("exact comparison needs t > 0");
    const ExactSolution sol(c.euler_left, c.euler_right, c.eos);
    ErrorRow row{run.manifest.solver, c.mesh.n_cells, {}};
    for (std::size_t k = 0; k < table.fields.size(); ++k)
      row.l1[table.fields[k]] =
          l1_error(s.column(table.fields[k]), fields[k], sol, s.time, c.mesh, c.x_disc);
    table.rows.push_back(row);
  }
  add_convergence(table);
  return table;
}

ErrorTable compare_reference(const std::vector<RunResult>& runs, const RunResult& reference) {
  ErrorTable table;
  const SnapshotTable& ref = final_snapshot(reference);
  table.reference = reference.manifest.solver + " " + std::to_string(reference.manifest.cells) + " cells";
  table.fields = value_columns(ref);
  for (const RunResult& run : runs) {
    const SnapshotTable& s = final_snapshot(run);
    if (value_columns(s) != table.fields)
      throw std::invalid_argument("run '" + run.manifest.case_name + "' has different fields than the reference");
    if (s.time != ref.time)
      throw std::invalid_argument("run and reference end at different times");
    const Mesh1D& m = run.config.mesh;
    const Mesh1D& rm = reference.config.mesh;
    if (m.x_min != rm.x_min || m.x_max != rm.x_max)
      throw std::invalid_argument("run and reference cover different domains");
    ErrorRow row{run.manifest.solver, m.n_cells, {}};
    for (const auto& f : table.fields) {
      const std::vector<double> avg = block_average(ref.column(f), m.n_cells);
      const std::vector<double>& q = s.column(f);
      double sum = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) sum += std::fabs(q[i] - avg[i]);
      row.l1[f] = sum * m.dx();
    }
    table.rows.push_back(row);
  }
  add_convergence(table);
  return table;
}

std::string ErrorTable::to_text() const {
  std::ostringstream os;
  os << "L1 errors against " << reference << "\n";
  os << std::left << std::setw(16) << "solver" << std::setw(8) << "cells";
  for (const auto& f : fields) os << std::setw(14) << f;
  os << "\n";
  os << std::scientific << std::setprecision(4);
  for (const auto& r : rows) {
    os << std::setw(16) << r.label << std::setw(8) << r.cells;
    for (const auto& f : fields) os << std::setw(14) << r.l1.at(f);
    os << "\n";
  }
  if (!convergence.empty()) {
    os << "convergence ratios L1(coarse)/L1(fine)\n" << std::fixed << std::setprecision(3);
    for (const auto& c : convergence) {
      os << std::setw(16) << c.label << std::setw(14)
         << (std::to_string(c.coarse_cells) + "->" + std::to_string(c.fine_cells));
      for (const auto& f : fields) os << std::setw(14) << c.ratio.at(f);
      os << "\n";
    }
  }
  return os.str();
}

nlohmann::json ErrorTable::to_json() const {
  nlohmann::json j;
  j["reference"] = reference;
  j["fields"] = fields;
  for (const auto& r : rows) j["rows"].push_back({{"solver", r.label}, {"cells", r.cells}, {"l1", r.l1}});
  for (const auto& c : convergence)
    j["convergence"].push_back({{"solver", c.label},
                                {"coarse_cells", c.coarse_cells},
                                {"fine_cells", c.fine_cells},
                                {"ratio", c.ratio}});
  return j;
}

}  // namespace rsir
