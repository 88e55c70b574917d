#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fairsect/geometry.hpp"

namespace fairsect {

/// A convex body represented by its boundary vertices in counter-clockwise
/// order, first vertex lexicographically smallest (x, then y).
///
/// Two construction paths exist. canonicalize() takes an arbitrary point
/// cloud, hulls it and strips collinear vertices; this is the default for
/// external input. from_boundary_loop() trusts an already-convex CCW loop
/// and keeps deliberate on-edge vertices (the catalog uses it to pin exact
/// boundary points such as chord endpoints of closed-form bodies).
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    static ConvexPolygon canonicalize(std::vector<Vec2> points);
    static ConvexPolygon from_boundary_loop(std::vector<Vec2> loop);

    const std::vector<Vec2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Vec2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

    double area() const { return area_; }
    double perimeter() const { return perimeter_; }
    const Vec2& centroid() const { return centroid_; }

    /// Cumulative arclength from vertex 0 to vertex i (cums()[0] == 0,
    /// cums()[n] == perimeter()).
    const std::vector<double>& cums() const { return cums_; }

    /// Point at normalized arclength t in [0,1) from vertex 0, CCW.
    Vec2 boundary_point(double t) const;

    /// Edge index and point for a normalized arclength parameter.
    std::pair<std::size_t, Vec2> boundary_edge_point(double t) const;

    /// Normalized arclength parameter of the boundary point nearest to p,
    /// together with its distance to the boundary.
    std::pair<double, double> boundary_parameter_near(const Vec2& p) const;

    /// Parameter for a point known to lie on edge `edge` at fraction
    /// `frac` in [0,1] along it.
    double parameter_at(std::size_t edge, double frac) const;

    Vec2 bbox_min() const { return bbox_min_; }
    Vec2 bbox_max() const { return bbox_max_; }
    double scale() const { return (bbox_max_ - bbox_min_).norm(); }

private:
    void finalize();  // orientation, rotation to lex-min, caches

    std::vector<Vec2> verts_;
    std::vector<double> cums_;
    double area_ = 0.0;
    double perimeter_ = 0.0;
    Vec2 centroid_;
    Vec2 bbox_min_, bbox_max_;
};

double shoelace_area(std::span<const Vec2> pts);

/// Max pairwise vertex distance and one attaining pair (lowest-index pair
/// under exact ties), via antipodal pairs.
struct PolygonDiameter {
    double value;
    std::size_t i;
    std::size_t j;
};
PolygonDiameter diameter(const ConvexPolygon& p);

/// Minimum width and the outer normal of the attaining edge (smallest edge
/// index under exact ties); the direction is reduced to angle in [0, pi).
struct PolygonWidth {
    double value;
    Vec2 direction;
    std::size_t edge;
    std::size_t far_vertex;
};
PolygonWidth width(const ConvexPolygon& p);

/// Center of symmetry if reflecting through the centroid maps the vertex
/// set to itself within tol * diameter; empty otherwise.
std::optional<Vec2> is_centrally_symmetric(const ConvexPolygon& p, double tol = 1e-9);

}  // namespace fairsect
