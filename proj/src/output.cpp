#include "rsir/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rsir/config.hpp"
#include "rsir/errors.hpp"

namespace rsir {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string csv_text(const SnapshotTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.columns.size(); ++k)
    out += (k ? "," : "") + table.columns[k];
  out += "\n";
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t k = 0; k < table.columns.size(); ++k)
      out += (k ? "," : "") + g17(table.data[k][i]);
    out += "\n";
  }
  return out;
}

void emit_csv(const SnapshotTable& table, const std::filesystem::path& path) {
  write_file(path, csv_text(table));
}

std::string plot_script(const RunManifest& m, const std::vector<std::string>& columns,
                        const std::vector<std::string>& csv_files, const std::string& image) {
  std::ostringstream gp;
  const std::size_t panels = columns.size() > 1 ? columns.size() - 1 : 1;
  const std::size_t ncol = panels <= 4 ? 2 : 3;
  const std::size_t nrow = (panels + ncol - 1) / ncol;
  gp << "# " << m.case_name << ": " << m.solver << ", beta = " << m.beta << ", "
     << m.cells << " cells, CFL = " << m.cfl << "\n";
  gp << "set datafile separator ','\n";
  gp << "set terminal pngcairo size " << 420 * ncol << "," << 320 * nrow << "\n";
  gp << "set output '" << image << "'\n";
  gp << "set key autotitle columnhead\n";
  gp << "set multiplot layout " << nrow << "," << ncol << " title '" << m.case_name << "'\n";
  for (std::size_t k = 1; k < columns.size(); ++k) {
    gp << "set title '" << columns[k] << "'\nset xlabel 'x (m)'\nplot ";
    for (std::size_t f = 0; f < csv_files.size(); ++f) {
      gp << (f ? ", \\\n     " : "") << "'" << csv_files[f] << "' using 1:" << k + 1
         << " with linespoints pt 7 ps 0.4 title 't = "
         << (f < m.output_times.size() ? g17(m.output_times[f]) : std::string("?")) << " s'";
    }
    gp << "\n";
  }
  gp << "unset multiplot\n";
  return gp.str();
}

void emit_plot_script(const RunManifest& manifest, const std::vector<std::string>& columns,
                      const std::vector<std::string>& csv_files,
                      const std::filesystem::path& path) {
  std::filesystem::path image = path;
  image.replace_extension(".png");
  write_file(path, plot_script(manifest, columns, csv_files, image.filename().string()));
}

nlohmann::json manifest_json(const RunManifest& m) {
  nlohmann::json j;
  j["case"] = m.case_name;
  j["description"] = m.description;
  j["model"] = m.model;
  j["solver"] = m.solver;
  j["beta"] = m.beta;
  j["cfl"] = m.cfl;
  j["limiter"] = m.limiter;
  j["boundary"] = m.boundary;
  j["cells"] = m.cells;
  j["domain"] = {m.x_min, m.x_max};
  j["x_disc"] = m.x_disc;
  j["t_end"] = m.t_end;
  j["output_times"] = m.output_times;
  j["steps"] = m.steps;
  j["wall_time_s"] = m.wall_time_s;
  j["fallbacks"] = {{"rsir_positivity", m.rsir_fallbacks},
                    {"alpha_clamps", m.alpha_clamps},
                    {"dt_rejections", m.dt_rejections}};
  j["relaxation"] = {{"max_residual", m.relax_max_residual},
                     {"max_energy_defect", m.relax_max_energy_defect}};
  j["conservation_defects"] = m.conservation_defects;
  j["files"] = m.files;
  return j;
}

RunManifest write_run(const RunResult& result, const std::filesystem::path& dir,
                      const std::string& stem) {
  std::filesystem::create_directories(dir);
  RunManifest m = result.manifest;
  std::vector<std::string> csv_files;
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    const std::string name = stem + "_t" + std::to_string(k) + ".csv";
    emit_csv(result.snapshots[k], dir / name);
    csv_files.push_back(name);
  }
  m.files = csv_files;
  const std::string gp = stem + ".gp";
  const std::string cfg = stem + ".cfg";
  const std::string js = stem + ".json";
  if (!result.snapshots.empty())
    emit_plot_script(m, result.snapshots.front().columns, csv_files, dir / gp);
  write_file(dir / cfg, to_config_text(result.config));
  m.files.push_back(gp);
  m.files.push_back(cfg);
  m.files.push_back(js);
  write_file(dir / js, manifest_json(m).dump(2) + "\n");
  return m;
}

}  // namespace rsir
