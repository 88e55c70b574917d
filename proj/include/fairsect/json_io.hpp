#pragma once

#include <string>

#include <json.hpp>

#include "fairsect/bisect.hpp"
#include "fairsect/catalog.hpp"
#include "fairsect/directions.hpp"
#include "fairsect/position.hpp"

namespace fairsect {

using json = nlohmann::json;

/// {"vertices": [[x, y], ...]}; the reader canonicalizes, the writer emits
/// canonical order at 17 significant digits.
ConvexPolygon polygon_from_json(const json& j);
std::string polygon_to_json_text(const ConvexPolygon& poly);
ConvexPolygon read_polygon_file(const std::string& path);
void write_polygon_file(const ConvexPolygon& poly, const std::string& path);

json chord_to_json(const Chord& chord);
json bisect_result_to_json(const BisectResult& result);
json direction_set_to_json(const DirectionSet& dirs);
json position_report_to_json(const PositionReport& report);
json catalog_entry_to_json(const CatalogEntry& entry);

struct MeasureReport {
    double area = 0.0;
    double diameter = 0.0;
    double width = 0.0;
    double d_b = 0.0;
    double w_b = 0.0;
    double iso_diam = 0.0;   // A / D_B^2
    double iso_width = 0.0;  // A / w_B^2
    Chord diameter_chord;
    Chord width_chord;
    BisectOptions options;
};

MeasureReport measure(const ConvexPolygon& poly, const BisectOptions& opts = {});
json measure_report_to_json(const MeasureReport& report);

}  // namespace fairsect
