#include "fairsect/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fairsect/errors.hpp"
#include "fairsect/version.hpp"

namespace fairsect {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ConvexPolygon polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("polygon JSON: missing \"vertices\" array");
    std::vector<Vec2> pts;
    pts.reserve(j["vertices"].size());
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
            throw ParseError("polygon JSON: vertex must be [x, y]");
        pts.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return ConvexPolygon::canonicalize(std::move(pts));
}

std::string polygon_to_json_text(const ConvexPolygon& poly) {
    std::ostringstream os;
    os << "{\"vertices\": [";
    const auto& v = poly.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << "[" << fmt17(v[i].x) << ", " << fmt17(v[i].y) << "]";
    }
    os << "]}\n";
    return os.str();
}

ConvexPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("input JSON parse failure: ") + e.what());
    }
    return polygon_from_json(j);
}

void write_polygon_file(const ConvexPolygon& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << polygon_to_json_text(poly);
}

json chord_to_json(const Chord& chord) {
    return json{{"s", chord.s},
                {"t", chord.t},
                {"p", {chord.p.x, chord.p.y}},
                {"q", {chord.q.x, chord.q.y}}};
}

json bisect_result_to_json(const BisectResult& result) {
    json near = json::array();
    for (const Chord& c : result.near_optima) near.push_back(chord_to_json(c));
    return json{{"value", result.value},
                {"chord", chord_to_json(result.chord)},
                {"piece_values", {result.piece_values.first, result.piece_values.second}},
                {"balanced", result.balanced},
                {"near_optima", near}};
}

json direction_set_to_json(const DirectionSet& dirs) {
    return json{{"angles", dirs.angles},
                {"source", dirs.source == DirectionSource::Diametrical ? "diametrical"
                                                                       : "bisector"},
                {"tol", dirs.tol}};
}

json position_report_to_json(const PositionReport& report) {
    json trace = json::array();
    for (const auto& t : report.trace)
        trace.push_back({{"r", t.r}, {"alpha", t.alpha}, {"quotient", t.quotient}});
    return json{{"matrix", {{report.map.a, report.map.b}, {report.map.c, report.map.d}}},
                {"translation", {report.map.translation.x, report.map.translation.y}},
                {"quotient", report.quotient},
                {"functional", functional_name(report.functional)},
                {"sense", report.sense == OptimizeSense::Max ? "max" : "min"},
                {"r", report.r},
                {"alpha", report.alpha},
                {"trace", trace}};
}

json catalog_entry_to_json(const CatalogEntry& entry) {
    json refs = json::object();
    for (const auto& [key, rv] : entry.reference_values)
        refs[key] = {{"value", rv.value}, {"tol", rv.tol}, {"source", rv.source}};
    json vertices = json::array();
    for (const Vec2& v : entry.polygon.vertices()) vertices.push_back({v.x, v.y});
    return json{{"vertices", vertices},
                {"meta",
                 {{"name", entry.name},
                  {"params", entry.params},
                  {"approx_error_area", entry.approx_error_area},
                  {"reference_values", refs}}}};
}

MeasureReport measure(const ConvexPolygon& poly, const BisectOptions& opts) {
    MeasureReport r;
    r.options = opts;
    r.area = poly.area();
    r.diameter = diameter(poly).value;
    r.width = width(poly).value;
    const BisectResult db = min_bisect_diameter(poly, opts);
    const BisectResult wb = min_bisect_width(poly);
    r.d_b = db.value;
    r.w_b = wb.value;  // width(poly)/2 by construction
    r.diameter_chord = db.chord;
    r.width_chord = wb.chord;
    r.iso_diam = r.area / (r.d_b * r.d_b);
    r.iso_width = r.area / (r.w_b * r.w_b);
    return r;
}

json measure_report_to_json(const MeasureReport& report) {
    return json{
        {"area", report.area},
        {"diameter", report.diameter},
        {"width", report.width},
        {"d_b", report.d_b},
        {"w_b", report.w_b},
        {"quotients", {{"iso_diam", report.iso_diam}, {"iso_width", report.iso_width}}},
        {"chords",
         {{"diameter", chord_to_json(report.diameter_chord)},
          {"width", chord_to_json(report.width_chord)}}},
        {"provenance",
         {{"tool", "fairsect"},
          {"version", kVersion},
          {"options",
           {{"grid", report.options.grid},
            {"starts", report.options.starts},
            {"refine_tol", report.options.refine_tol},
            {"polish_tol", report.options.polish_tol},
            {"near_rel", report.options.near_rel}}},
          {"tolerances",
           {{"eps_geo", kEpsGeo}, {"balance_rel", kBalanceRel}, {"near_rel", kNearRel}}}}}};
}

}  // namespace fairsect
