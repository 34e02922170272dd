#pragma once

#include <string>

#include "polyext/geometry.hpp"

namespace polyext {

struct SvgOptions {
    bool draw_unit_circle = false;
    bool labels = true;
    int size_px = 640;
};

/// Renders the polygon as a standalone SVG document: the closed path, the
/// unit circle when requested, vertex labels A1..An, and a caption with the
/// perimeter and both pairwise distance sums. Self-crossing polygons are
/// drawn as-is. Output is a pure function of the inputs.
std::string polygon_svg(const Polygon& p, const SvgOptions& options = {});

void write_polygon_svg(const std::string& path, const Polygon& p,
                       const SvgOptions& options = {});

}  // namespace polyext
