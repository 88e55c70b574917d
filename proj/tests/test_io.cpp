#include <doctest.h>

#include <cstdio>

#include "fairsect/errors.hpp"
#include "fairsect/json_io.hpp"
#include "fairsect/svg.hpp"
#include "test_support.hpp"

using namespace fairsect;
using namespace fairsect::testing;

TEST_CASE("polygon JSON round trip is bit exact") {
    const auto p = random_hull(11, 14);
    const std::string text = polygon_to_json_text(p);
    const auto q = polygon_from_json(json::parse(text));
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p.vertices()[i].x == q.vertices()[i].x);
        CHECK(p.vertices()[i].y == q.vertices()[i].y);
    }
}

TEST_CASE("polygon reader canonicalizes and rejects junk") {
    const auto p = polygon_from_json(json::parse(
        R"({"vertices": [[1,1],[0,0],[1,0],[0.5,0],[0,1]]})"));
    CHECK(p.size() == 4);  // hull, collinear point dropped
    CHECK(p.vertices()[0].x == 0.0);

    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"points": []})")), ParseError);
    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": [[1],[2]]})")),
                    ParseError);
}

TEST_CASE("polygon file IO") {
    const auto p = random_hull(3, 10);
    const std::string path = "/tmp/fairsect_test_poly.json";
    write_polygon_file(p, path);
    const auto q = read_polygon_file(path);
    REQUIRE(p.size() == q.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(dist(p.vertices()[i], q.vertices()[i]) == 0.0);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_polygon_file("/tmp/definitely_missing_fairsect.json"), ParseError);
}

TEST_CASE("measure report fields are mutually consistent") {
    const auto p = make_catalog("rect", {{"a", 2.0}, {"b", 4.0}}).polygon;
    const auto r = measure(p);
    CHECK(r.w_b == r.width / 2.0);
    CHECK(r.iso_diam == r.area / (r.d_b * r.d_b));
    CHECK(r.iso_width == r.area / (r.w_b * r.w_b));
    const json j = measure_report_to_json(r);
    CHECK(j["quotients"]["iso_diam"].get<double>() == r.iso_diam);
    // Round trip through text preserves the doubles bit for bit.
    const json back = json::parse(j.dump());
    CHECK(back["d_b"].get<double>() == r.d_b);
    CHECK(back["quotients"]["iso_width"].get<double>() == r.iso_width);
}

TEST_CASE("bisect result JSON carries the pinned fields") {
    const auto p = make_catalog("square", {{"side", 1.0}}).polygon;
    const auto res = min_bisect_diameter(p);
    const json j = bisect_result_to_json(res);
    CHECK(j.contains("value"));
    CHECK(j["chord"].contains("s"));
    CHECK(j["chord"].contains("p"));
    CHECK(j["piece_values"].size() == 2);
    CHECK(j.contains("balanced"));
    CHECK(j["near_optima"].is_array());
}

TEST_CASE("svg output is deterministic and carries one chord") {
    const auto p = make_catalog("Q", {{"n", 64.0}}).polygon;
    RenderOptions ro;
    ro.chord = min_bisect_diameter(p).chord;
    ro.draw_pieces = true;
    const std::string a = render_svg(p, ro);
    const std::string b = render_svg(p, ro);
    CHECK(a == b);
    std::size_t count = 0, pos = 0;
    while ((pos = a.find("class=\"chord\"", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 1);
    CHECK(a.find("viewBox=") != std::string::npos);
    CHECK(a.rfind("<svg", 0) == 0);
}

TEST_CASE("direction set and position report serialize") {
    const auto p = make_catalog("equilateral", {{"side", 1.0}}).polygon;
    const json dj = direction_set_to_json(diametrical_directions(p));
    CHECK(dj["angles"].size() == 3);
    CHECK(dj["source"] == "diametrical");

    const auto rep = optimize_position(p, QuotientFunctional::AreaOverWidthSq,
                                       OptimizeSense::Min);
    const json pj = position_report_to_json(rep);
    CHECK(pj["matrix"].size() == 2);
    CHECK(pj["functional"] == "A/w^2");
    CHECK(pj["sense"] == "min");
    CHECK(pj["trace"].is_array());
    CHECK_FALSE(pj["trace"].empty());
}

TEST_CASE("catalog entry JSON exposes the meta block") {
    const json j = catalog_entry_to_json(make_catalog("Q", {{"n", 64.0}}));
    CHECK(j.contains("vertices"));
    CHECK(j["meta"]["name"] == "Q");
    CHECK(j["meta"]["approx_error_area"].get<double>() > 0.0);
    CHECK(j["meta"]["reference_values"].contains("area"));
    CHECK(j["meta"]["reference_values"]["area"].contains("source"));
}
