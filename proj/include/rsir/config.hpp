#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rsir/case_config.hpp"
#include "rsir/errors.hpp"

namespace rsir {

/// Validation failure attributable to one config key.
class ConfigKeyError : public ConfigError {
public:
  ConfigKeyError(const std::string& key, const std::string& what)
      : ConfigError(key + ": " + what), key_(key) {}
  const std::string& key() const noexcept { return key_; }
  /// Same error with a "source:line: " location prepended.
  ConfigKeyError located(const std::string& prefix) const {
    return ConfigKeyError(prefix + what(), key_, 0);
  }

private:
  ConfigKeyError(const std::string& full, const std::string& key, int)
      : ConfigError(full), key_(key) {}
  std::string key_;
};

/// Parses the flat `section.key = value` format ('#' starts a comment) and validates the
/// result. Errors name the source and line.
CaseConfig parse_config(std::string_view text, std::string_view source = "<config>");
CaseConfig load_config(const std::filesystem::path& path);

/// Sets one key on an existing config without validating.
void set_config_key(CaseConfig& config, const std::string& key, const std::string& value);

/// All keys understood by the parser.
std::vector<std::string> config_keys();

/// Inverse of parse_config for a validated config.
std::string to_config_text(const CaseConfig& config);

}  // namespace rsir
