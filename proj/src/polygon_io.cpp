#include "polyext/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include "polyext/json_text.hpp"

namespace polyext {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json polygon_to_json(const Polygon& p) {
    ordered_json verts = ordered_json::array();
    for (const Point& v : p.vertices()) verts.push_back(ordered_json::array({v.x, v.y}));
    return ordered_json{{"vertices", std::move(verts)}};
}

namespace {

// nlohmann reports a byte offset; turn it into line/column for the message.
std::string position_of(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col;
    return os.str();
}

}  // namespace

Polygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("polygon JSON must be an object with a \"vertices\" array");
    std::vector<Point> verts;
    for (const auto& el : j["vertices"]) {
        if (!el.is_array() || el.size() != 2 || !el[0].is_number() || !el[1].is_number())
            throw ParseError("each vertex must be a [x, y] number pair");
        verts.push_back({el[0].get<double>(), el[1].get<double>()});
    }
    if (verts.size() < 3) throw ParseError("polygon needs at least 3 vertices");
    try {
        return Polygon(std::move(verts));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Polygon polygon_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error at " + position_of(text, e.byte) + ": " +
                         e.what());
    }
    return polygon_from_json(j);
}

Polygon load_polygon(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return polygon_from_json_text(buf.str());
}

void save_polygon(const std::string& path, const Polygon& p) {
    write_json_file(path, polygon_to_json(p));
}

}  // namespace polyext
