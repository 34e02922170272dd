#pragma once

#include <string>

#include <json.hpp>

namespace polyext {

/// Serializes JSON with floating-point numbers rendered at 17 significant
/// digits, so reports round-trip exactly and rerunning a command produces
/// byte-identical files.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace polyext
