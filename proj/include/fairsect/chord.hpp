#pragma once

#include <optional>

#include "fairsect/polygon.hpp"

namespace fairsect {

/// A line segment with both endpoints on the boundary, addressed by
/// normalized arclength parameters.
struct Chord {
    double s = 0.0;
    double t = 0.0;
    Vec2 p;          // boundary_point(s)
    Vec2 q;          // boundary_point(t)
    Vec2 direction;  // unit vector from p to q

    double length() const { return dist(p, q); }
};

/// Builds a chord from two boundary parameters. Throws InvalidChord when
/// the resolved endpoints coincide within kEpsGeo * perimeter.
Chord make_chord(const ConvexPolygon& poly, double s, double t);

/// Full chord of the polygon on the line { x . normal == offset }, or
/// nothing if the line misses the interior. normal need not be unit.
std::optional<Chord> chord_at_line(const ConvexPolygon& poly, const Vec2& normal,
                                   double offset);

/// One side of a chord bisection. A piece whose area falls below
/// kEpsGeo * area(parent) degenerates to the chord segment itself:
/// diameter = segment length, width = 0.
struct ClipPiece {
    bool degenerate = false;
    ConvexPolygon poly;  // valid iff !degenerate
    Vec2 seg_a, seg_b;   // the chord segment (always set)

    double area() const { return degenerate ? 0.0 : poly.area(); }
    double diameter_value() const;
    double width_value() const;
};

struct Bisection {
    Chord chord;
    ClipPiece piece1;  // boundary from s to t (CCW), closed by the chord
    ClipPiece piece2;  // complementary side
    double parent_area = 0.0;
};

/// Splits the polygon along the chord into two CCW convex pieces that share
/// exactly the chord; chord endpoints become vertices of both pieces.
Bisection clip_by_chord(const ConvexPolygon& poly, const Chord& chord);

}  // namespace fairsect
