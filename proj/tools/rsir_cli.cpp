// Command-line front end: run, list, compare, sweep.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsir/cases.hpp"
#include "rsir/compare.hpp"
#include "rsir/config.hpp"
#include "rsir/output.hpp"

namespace fs = std::filesystem;
using namespace rsir;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// A catalog name or a config file path.
CaseConfig load_case(const std::string& what) {
  if (fs::exists(what)) {
    CaseConfig c = load_config(what);
    if (c.name.empty()) c.name = fs::path(what).stem().string();
    return c;
  }
  return builtin_case(what);
}

void apply_overrides(CaseConfig& c, const std::vector<std::string>& sets) {
  bool outputs_given = false;
  for (const auto& s : sets) outputs_given |= s.rfind("model.outputs=", 0) == 0;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
    const std::string key = s.substr(0, eq);
    set_config_key(c, key, s.substr(eq + 1));
    if (key == "model.t_end" && !outputs_given) c.outputs.clear();
  }
  c.validate();
}

struct Common {
  std::vector<std::string> sets;
  std::string solver;
  double beta = -1.0;
  double cfl = -1.0;
  long cells = -1;
  bool parallel = false;

  void add(CLI::App* app) {
    app->add_option("--set", sets, "Override a config key (key=value), repeatable");
    app->add_option("--solver", solver, "Shortcut for --set solver.name=...");
    app->add_option("--beta", beta, "Shortcut for --set solver.beta=...");
    app->add_option("--cfl", cfl, "Shortcut for --set solver.cfl=...");
    app->add_option("--cells", cells, "Shortcut for --set model.cells=...");
    app->add_flag("--parallel", parallel, "Use the OpenMP kernels");
  }

  std::vector<std::string> all_sets() const {
    std::vector<std::string> out = sets;
    auto num = [](double x) {
      std::ostringstream os;
      os.precision(17);
      os << x;
      return os.str();
    };
    if (!solver.empty()) out.push_back("solver.name=" + solver);
    if (beta >= 0.0) out.push_back("solver.beta=" + num(beta));
    if (cfl >= 0.0) out.push_back("solver.cfl=" + num(cfl));
    if (cells >= 0) out.push_back("model.cells=" + std::to_string(cells));
    return out;
  }
  RunOptions options() const { return {parallel ? Exec::parallel : Exec::serial}; }
};

void print_manifest_summary(const RunManifest& m) {
  std::printf("%s: %s beta=%g cfl=%g cells=%zu steps=%zu wall=%.3fs fallbacks=%zu clamps=%zu rejections=%zu\n",
              m.case_name.c_str(), m.solver.c_str(), m.beta, m.cfl, m.cells, m.steps,
              m.wall_time_s, m.rsir_fallbacks, m.alpha_clamps, m.dt_rejections);
  for (const auto& [name, d] : m.conservation_defects)
    std::printf("  conservation defect %-9s %.3e\n", name.c_str(), d);
}

int cmd_list() {
  for (const auto& name : builtin_case_names()) {
    const CaseConfig c = builtin_case(name);
    std::printf("%-26s %-10s %s\n", name.c_str(),
                c.model == ModelKind::euler ? "euler" : "two-phase", c.description.c_str());
  }
  return 0;
}

int cmd_run(const std::string& what, const Common& common, const std::string& out_dir,
            bool show_config) {
  CaseConfig c = load_case(what);
  apply_overrides(c, common.all_sets());
  if (show_config) std::cout << to_config_text(c);
  const RunResult r = run(c, common.options());
  const RunManifest m = write_run(r, out_dir, c.name.empty() ? "run" : c.name);
  print_manifest_summary(m);
  for (const auto& f : m.files) std::printf("  wrote %s\n", (fs::path(out_dir) / f).string().c_str());
  return 0;
}

int cmd_compare(const std::string& what, const Common& common, const std::string& solvers,
                const std::string& cells, const std::string& reference,
                const std::string& json_path) {
  CaseConfig base = load_case(what);
  apply_overrides(base, common.all_sets());
  std::vector<RunResult> runs;
  const auto solver_list = solvers.empty() ? std::vector<std::string>{base.solver} : split_list(solvers);
  const auto cell_list =
      cells.empty() ? std::vector<std::string>{std::to_string(base.mesh.n_cells)} : split_list(cells);
  for (const auto& s : solver_list) {
    for (const auto& n : cell_list) {
      CaseConfig c = base;
      apply_overrides(c, {"solver.name=" + s, "model.cells=" + n});
      runs.push_back(run(c, common.options()));
    }
  }
  ErrorTable table;
  if (reference == "exact") {
    table = compare_exact(runs);
  } else {
    // fine:<cells>[:<solver>]
    const auto parts = split_list([&] {
      std::string r = reference;
      for (char& ch : r)
        if (ch == ':') ch = ',';
      return r;
    }());
    if (parts.empty() || parts[0] != "fine" || parts.size() < 2)
      throw ConfigError("--reference must be 'exact' or 'fine:<cells>[:<solver>]'");
    CaseConfig c = base;
    std::vector<std::string> sets = {"model.cells=" + parts[1]};
    if (parts.size() > 2) sets.push_back("solver.name=" + parts[2]);
    apply_overrides(c, sets);
    table = compare_reference(runs, run(c, common.options()));
  }
  std::cout << table.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
    out << table.to_json().dump(2) << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& what, const Common& common, const std::string& betas,
              const std::string& cfls, const std::string& cells, const std::string& out_dir) {
  CaseConfig base = load_case(what);
  apply_overrides(base, common.all_sets());
  auto or_default = [](const std::string& list, std::string def) {
    return list.empty() ? std::vector<std::string>{std::move(def)} : split_list(list);
  };
  std::ostringstream b, f;
  b.precision(17);
  f.precision(17);
  b << base.beta;
  f << base.cfl;
  std::vector<CaseConfig> grid;
  for (const auto& beta : or_default(betas, b.str()))
    for (const auto& cfl : or_default(cfls, f.str()))
      for (const auto& n : or_default(cells, std::to_string(base.mesh.n_cells))) {
        CaseConfig c = base;
        apply_overrides(c, {"solver.beta=" + beta, "solver.cfl=" + cfl, "model.cells=" + n});
        grid.push_back(c);
      }

  // Independent simulations, each with serial kernels.
  std::vector<RunResult> results(grid.size());
  std::vector<std::string> errors(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      results[k] = run(grid[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }

  std::printf("%-8s %-6s %-7s %-8s %-10s %-10s %s\n", "beta", "cfl", "cells", "steps",
              "fallbacks", "max_defect", "status");
  int failures = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const CaseConfig& c = grid[k];
    if (!errors[k].empty()) {
      ++failures;
      std::printf("%-8g %-6g %-7zu %-8s %-10s %-10s failed: %s\n", c.beta, c.cfl, c.mesh.n_cells,
                  "-", "-", "-", errors[k].c_str());
      continue;
    }
    const RunManifest& m = results[k].manifest;
    double worst = 0.0;
    for (const auto& [name, d] : m.conservation_defects) worst = std::max(worst, d);
    std::printf("%-8g %-6g %-7zu %-8zu %-10zu %-10.2e ok\n", c.beta, c.cfl, c.mesh.n_cells,
                m.steps, m.rsir_fallbacks, worst);
    if (!out_dir.empty()) {
      std::ostringstream stem;
      stem << c.name << "_b" << c.beta << "_cfl" << c.cfl << "_n" << c.mesh.n_cells;
      write_run(results[k], out_dir, stem.str());
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D finite-volume solver with internal-reconstruction Riemann solvers"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the built-in cases");

  std::string target;
  Common run_common;
  std::string out_dir = "out";
  bool show_config = false;
  auto* run_cmd = app.add_subcommand("run", "Run a built-in case or a config file");
  run_cmd->add_option("case", target, "Case name or config file")->required();
  run_cmd->add_option("-o,--out", out_dir, "Output directory");
  run_cmd->add_flag("--show-config", show_config, "Print the effective config first");
  run_common.add(run_cmd);

  Common cmp_common;
  std::string cmp_target, solvers, cmp_cells, reference = "exact", json_path;
  auto* cmp = app.add_subcommand("compare", "L1 error table against the exact or a fine-mesh solution");
  cmp->add_option("case", cmp_target, "Case name or config file")->required();
  cmp->add_option("--solvers", solvers, "Comma-separated solver names");
  cmp->add_option("--mesh", cmp_cells, "Comma-separated cell counts");
  cmp->add_option("--reference", reference, "'exact' or 'fine:<cells>[:<solver>]'");
  cmp->add_option("--json", json_path, "Also write the table as JSON");
  cmp_common.add(cmp);

  Common sw_common;
  std::string sw_target, betas, cfls, sw_cells, sw_out;
  auto* sweep = app.add_subcommand("sweep", "Run a beta / CFL / mesh grid");
  sweep->add_option("case", sw_target, "Case name or config file")->required();
  sweep->add_option("--betas", betas, "Comma-separated beta values");
  sweep->add_option("--cfls", cfls, "Comma-separated CFL numbers");
  sweep->add_option("--meshes", sw_cells, "Comma-separated cell counts");
  sweep->add_option("-o,--out", sw_out, "Write every run into this directory");
  sw_common.add(sweep);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*list) return cmd_list();
    if (*run_cmd) return cmd_run(target, run_common, out_dir, show_config);
    if (*cmp) return cmd_compare(cmp_target, cmp_common, solvers, cmp_cells, reference, json_path);
    if (*sweep) return cmd_sweep(sw_target, sw_common, betas, cfls, sw_cells, sw_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
