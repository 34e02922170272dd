#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "polyext/bounds.hpp"
#include "polyext/constructions.hpp"
#include "polyext/json_text.hpp"
#include "polyext/metrics.hpp"
#include "polyext/optimize.hpp"
#include "polyext/polygon_io.hpp"
#include "polyext/rng.hpp"
#include "polyext/svg.hpp"
#include "polyext/verify.hpp"

#include "test_support.hpp"

using namespace polyext;

TEST_CASE("polygon JSON round-trips exactly") {
    Rng rng(41);
    for (int rep = 0; rep < 200; ++rep) {
        const Polygon p = test_support::random_polygon(rng.uniform_int(3, 12), rng);
        const std::string text = dump_json(polygon_to_json(p));
        const Polygon q = polygon_from_json_text(text);
        REQUIRE(q.size() == p.size());
        for (int i = 0; i < p.size(); ++i) REQUIRE(p[i] == q[i]);
    }
}

TEST_CASE("polygon JSON parsing errors") {
    CHECK_THROWS_AS(polygon_from_json_text("{\"vertices\": [[0,0],[1,0]]}"), ParseError);
    CHECK_THROWS_AS(polygon_from_json_text("{\"points\": []}"), ParseError);
    CHECK_THROWS_AS(polygon_from_json_text("{\"vertices\": [[0,0],[1,\"x\"],[1,1]]}"),
                    ParseError);
    try {
        polygon_from_json_text("{\"vertices\": [[0,0],\n[1,0],\n[1,!]]}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }
}

TEST_CASE("polygon file I/O") {
    const std::string path = "test_polygon_io.json";
    const Polygon p = construct::star_thrackle(7, 0.5);
    save_polygon(path, p);
    const Polygon q = load_polygon(path);
    for (int i = 0; i < p.size(); ++i) REQUIRE(p[i] == q[i]);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_polygon("does_not_exist_12345.json"), IoError);
}

TEST_CASE("JSON numbers carry 17 significant digits and are stable") {
    nlohmann::ordered_json j{{"x", 0.1}, {"y", 1.0 / 3.0}, {"k", 7}};
    const std::string a = dump_json(j);
    const std::string b = dump_json(j);
    CHECK(a == b);
    CHECK(a.find("0.10000000000000001") != std::string::npos);
    CHECK(a.find("0.33333333333333331") != std::string::npos);
    CHECK(a.find("\"k\": 7") != std::string::npos);
    // Round-trip through the text representation is exact.
    const auto back = nlohmann::json::parse(a);
    CHECK(back["x"].get<double>() == 0.1);
    CHECK(back["y"].get<double>() == 1.0 / 3.0);
}

TEST_CASE("bound set JSON carries every field") {
    const auto j = bounds::to_json(bounds::bound_set(5));
    for (const char* key : {"n", "s_lower", "s_upper", "S", "t_lower", "t_upper", "T",
                            "F", "F_attained", "G", "G_attained", "s_c", "S_c",
                            "t_c_lower", "t_c_upper", "T_c"})
        REQUIRE(j.contains(key));
    CHECK(j["n"] == 5);
    CHECK(j["S"] == 3.0);
    CHECK(j["T"] == 1.5);
    CHECK(j["F_attained"] == true);
    const auto j4 = bounds::to_json(bounds::bound_set(4));
    CHECK(j4["F_attained"] == false);
    CHECK(j4["G_attained"] == false);
}

TEST_CASE("optimization run JSON embeds the interchange polygon") {
    const auto run = opt::optimize({opt::ObjectiveKind::SumDistances,
                                    opt::Direction::Maximize},
                                   {true, false, false}, 4, 3, 4, 200);
    const auto j = opt::to_json(run);
    CHECK(j["objective"]["kind"] == "sum_distances");
    CHECK(j["objective"]["direction"] == "maximize");
    CHECK(j["constraints"]["unit_perimeter"] == true);
    CHECK(j["n"] == 4);
    CHECK(j["history"].size() == 4);
    const Polygon best = polygon_from_json(j["best_polygon"]);
    CHECK(best.size() == 4);
    // Byte-identical serialization for identical runs.
    const auto run2 = opt::optimize({opt::ObjectiveKind::SumDistances,
                                     opt::Direction::Maximize},
                                    {true, false, false}, 4, 3, 4, 200);
    CHECK(dump_json(opt::to_json(run2)) == dump_json(j));
}

TEST_CASE("SVG rendering") {
    const Polygon star = construct::star_thrackle(5, 1.0);
    SvgOptions options;
    options.draw_unit_circle = true;
    const std::string svg = polygon_svg(star, options);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polygon points=") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // the circle
    CHECK(svg.find(">A1<") != std::string::npos);
    CHECK(svg.find(">A5<") != std::string::npos);
    CHECK(svg.find("perimeter = 9.510565163") != std::string::npos);
    CHECK(polygon_svg(star, options) == svg);  // deterministic

    // Self-crossing input is drawn as-is (same five points, no rework).
    const Polygon bow({{0, 0}, {1, 1}, {1, 0}, {0, 1}});
    const std::string bow_svg = polygon_svg(bow);
    CHECK(bow_svg.find("<polygon") != std::string::npos);

    SvgOptions plain;
    plain.labels = false;
    CHECK(polygon_svg(bow, plain).find(">A1<") == std::string::npos);
}

TEST_CASE("verification reports") {
    using cli::TheoremTag;
    CHECK(cli::tag_from_name("t6") == TheoremTag::T6);
    CHECK(cli::tag_from_name("L3") == TheoremTag::L3);
    CHECK_FALSE(cli::tag_from_name("T9").has_value());
    CHECK_THROWS_AS(cli::run_verify(TheoremTag::T1, 2, 9, 0), BadRange);
    CHECK_THROWS_AS(cli::run_verify(TheoremTag::T1, 9, 3, 0), BadRange);
    CHECK_THROWS_AS(cli::run_verify(TheoremTag::T1, 3, 1000, 0), BadRange);

    const auto t6 = cli::run_verify(TheoremTag::T6, 3, 49, 42);
    CHECK(t6.overall_pass);
    const auto j = cli::to_json(t6);
    CHECK(j["theorem"] == "T6");
    CHECK(j["overall_pass"] == true);
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());
    for (const auto& c : j["checks"]) {
        REQUIRE(c.contains("description"));
        REQUIRE(c.contains("expected"));
        REQUIRE(c.contains("observed"));
        REQUIRE(c.contains("tolerance"));
        REQUIRE(c.contains("pass"));
    }
    // Same seed, same bytes.
    const auto again = cli::run_verify(TheoremTag::T6, 3, 49, 42);
    CHECK(dump_json(cli::to_json(again)) == dump_json(j));

    const auto l4 = cli::run_verify(TheoremTag::L4, 3, 9, 0);
    CHECK(l4.overall_pass);
    const auto l1 = cli::run_verify(TheoremTag::L1, 3, 20, 11);
    CHECK(l1.overall_pass);
    const auto t2 = cli::run_verify(TheoremTag::T2, 3, 12, 5);
    CHECK(t2.overall_pass);
}
