#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rsir/case_config.hpp"

namespace rsir {

std::vector<std::string> builtin_case_names();

/// Catalog entry as config text, including the comments that explain how its initial
/// data were chosen. Throws ConfigError listing the catalog for an unknown name.
const std::string& builtin_case_text(std::string_view name);

CaseConfig builtin_case(std::string_view name);

}  // namespace rsir
