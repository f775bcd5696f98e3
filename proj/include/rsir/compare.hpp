#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsir/driver.hpp"

namespace rsir {

struct ErrorRow {
  std::string label;  // solver name unless set by the caller
  std::size_t cells = 0;
  std::map<std::string, double> l1;  // per field
};

struct ConvergenceRow {
  std::string label;
  std::size_t coarse_cells = 0, fine_cells = 0;
  std::map<std::string, double> ratio;  // L1(coarse) / L1(fine)
};

struct ErrorTable {
  std::string reference;
  std::vector<std::string> fields;
  std::vector<ErrorRow> rows;
  std::vector<ConvergenceRow> convergence;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// L1 error (sum |q_i - q(x_i)| dx) of the final snapshot of each Euler run against the
/// exact Riemann solution of its own initial data.
ErrorTable compare_exact(const std::vector<RunResult>& runs);

/// L1 distance of each run's final snapshot to a fine-mesh reference averaged onto the
/// run's mesh. Reference cells must be an integer multiple of every run's cells.
ErrorTable compare_reference(const std::vector<RunResult>& runs, const RunResult& reference);

/// Block average of a fine cell field onto n_coarse cells.
std::vector<double> block_average(const std::vector<double>& fine, std::size_t n_coarse);

}  // namespace rsir
