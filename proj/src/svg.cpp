#include "polyext/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "polyext/metrics.hpp"

namespace polyext {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string fmt_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::string polygon_svg(const Polygon& p, const SvgOptions& options) {
    double min_x = p[0].x, max_x = p[0].x, min_y = p[0].y, max_y = p[0].y;
    for (const Point& v : p.vertices()) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    if (options.draw_unit_circle) {
        min_x = std::min(min_x, -1.0);
        max_x = std::max(max_x, 1.0);
        min_y = std::min(min_y, -1.0);
        max_y = std::max(max_y, 1.0);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.08 * span;
    const double world = span + 2.0 * margin;
    const double px = options.size_px;
    const double scale = px / world;
    // SVG y grows downward; flip.
    const auto sx = [&](double x) { return (x - min_x + margin) * scale; };
    const auto sy = [&](double y) { return px - (y - min_y + margin) * scale; };

    const MetricSummary m = summarize(p);
    std::ostringstream out;
    const int caption_px = 28;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px
        << "\" height=\"" << options.size_px + caption_px << "\" viewBox=\"0 0 "
        << options.size_px << " " << options.size_px + caption_px << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (options.draw_unit_circle) {
        out << "  <circle cx=\"" << fmt(sx(0.0)) << "\" cy=\"" << fmt(sy(0.0))
            << "\" r=\"" << fmt(scale) << "\" fill=\"none\" stroke=\"#999999\" "
            << "stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
    }

    out << "  <polygon points=\"";
    for (int i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << fmt(sx(p[i].x)) << ',' << fmt(sy(p[i].y));
    }
    out << "\" fill=\"none\" stroke=\"#1a56a0\" stroke-width=\"1.5\"/>\n";

    for (int i = 0; i < p.size(); ++i) {
        out << "  <circle cx=\"" << fmt(sx(p[i].x)) << "\" cy=\"" << fmt(sy(p[i].y))
            << "\" r=\"2.5\" fill=\"#c03020\"/>\n";
        if (options.labels) {
            out << "  <text x=\"" << fmt(sx(p[i].x) + 5.0) << "\" y=\""
                << fmt(sy(p[i].y) - 5.0) << "\" font-size=\"11\" "
                << "font-family=\"sans-serif\" fill=\"#333333\">A" << i + 1
                << "</text>\n";
        }
    }

    out << "  <text x=\"8\" y=\"" << options.size_px + caption_px - 10
        << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"#000000\">"
        << "perimeter = " << fmt_value(m.perimeter)
        << "   sum|AiAj| = " << fmt_value(m.sum_distances)
        << "   sum|AiAj|^2 = " << fmt_value(m.sum_squared_distances) << "</text>\n"
        << "</svg>\n";
    return out.str();
}

void write_polygon_svg(const std::string& path, const Polygon& p,
                       const SvgOptions& options) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << polygon_svg(p, options);
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace polyext
