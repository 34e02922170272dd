#pragma once

#include <string>

#include <json.hpp>

#include "polyext/geometry.hpp"

namespace polyext {

// Interchange format shared by every module and the CLI:
//   {"vertices": [[x, y], ...]}
// Vertex order is the cyclic order.

nlohmann::ordered_json polygon_to_json(const Polygon& p);

/// Throws ParseError (with line/column) on malformed text or a shape that
/// does not match the interchange format.
Polygon polygon_from_json_text(const std::string& text);

Polygon polygon_from_json(const nlohmann::json& j);

Polygon load_polygon(const std::string& path);   // IoError / ParseError
void save_polygon(const std::string& path, const Polygon& p);

}  // namespace polyext
