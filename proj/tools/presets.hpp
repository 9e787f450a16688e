#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"

namespace casimir_cli {

std::vector<std::string> preset_names();

// Stacks of a named preset, in output order; nullopt for unknown names.
std::optional<std::vector<RunConfig>> preset(std::string_view name);

}  // namespace casimir_cli
