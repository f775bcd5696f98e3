#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsir/driver.hpp"

namespace rsir {

/// Header line plus one row per cell, 17 significant digits.
std::string csv_text(const SnapshotTable& table);
void emit_csv(const SnapshotTable& table, const std::filesystem::path& path);

/// gnuplot script with one panel per field, one curve per snapshot file.
std::string plot_script(const RunManifest& manifest, const std::vector<std::string>& columns,
                        const std::vector<std::string>& csv_files, const std::string& image);
void emit_plot_script(const RunManifest& manifest, const std::vector<std::string>& columns,
                      const std::vector<std::string>& csv_files,
                      const std::filesystem::path& path);

nlohmann::json manifest_json(const RunManifest& manifest);

/// Writes <stem>_t<k>.csv per snapshot, <stem>.gp and <stem>.json into `dir` and records
/// the file names in the returned manifest.
RunManifest write_run(const RunResult& result, const std::filesystem::path& dir,
                      const std::string& stem);

}  // namespace rsir
