#include "fairsect/chord.hpp"

#include <algorithm>
#include <cmath>

#include "fairsect/errors.hpp"

namespace fairsect {

Chord make_chord(const ConvexPolygon& poly, double s, double t) {
    s -= std::floor(s);
    t -= std::floor(t);
    Chord c;
    c.s = s;
    c.t = t;
    c.p = poly.boundary_point(s);
    c.q = poly.boundary_point(t);
    const double sep = dist(c.p, c.q);
    if (sep <= kEpsGeo * poly.perimeter())
        throw InvalidChord("chord endpoints coincide");
    c.direction = (c.q - c.p) / sep;
    return c;
}

std::optional<Chord> chord_at_line(const ConvexPolygon& poly, const Vec2& normal,
                                   double offset) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();

    struct Hit {
        std::size_t edge;
        double frac;
        Vec2 point;
    };
    Hit hits[2];
    int count = 0;

    auto side = [&](std::size_t i) { return v[i].dot(normal) - offset; };
    for (std::size_t i = 0; i < n && count < 2; ++i) {
        const double da = side(i);
        const double db = side((i + 1) % n);
        // Vertices exactly on the line count as the negative side so each
        // crossing is reported once.
        const bool above_a = da > 0.0;
        const bool above_b = db > 0.0;
        if (above_a == above_b) continue;
        const double frac = da / (da - db);
        const Vec2 pt = v[i] + (v[(i + 1) % n] - v[i]) * frac;
        hits[count++] = {i, std::clamp(frac, 0.0, 1.0), pt};
    }
    if (count != 2) return std::nullopt;

    Chord c;
    c.s = poly.parameter_at(hits[0].edge, hits[0].frac);
    c.t = poly.parameter_at(hits[1].edge, hits[1].frac);
    c.p = hits[0].point;
    c.q = hits[1].point;
    const double sep = dist(c.p, c.q);
    if (sep <= kEpsGeo * poly.perimeter()) return std::nullopt;
    c.direction = (c.q - c.p) / sep;
    return c;
}

double ClipPiece::diameter_value() const {
    if (degenerate) return dist(seg_a, seg_b);
    return ring_diameter(poly.vertices()).value;
}

double ClipPiece::width_value() const {
    if (degenerate) return 0.0;
    return ring_width(poly.vertices()).value;
}

namespace {

ClipPiece build_piece(const ConvexPolygon& parent, std::vector<Vec2> loop,
                      const Vec2& a, const Vec2& b) {
    ClipPiece piece;
    piece.seg_a = a;
    piece.seg_b = b;
    const double area = loop.size() >= 3 ? shoelace_area(loop) : 0.0;
    if (loop.size() < 3 || area <= kEpsGeo * parent.area()) {
        piece.degenerate = true;
        return piece;
    }
    piece.poly = ConvexPolygon::from_boundary_loop(std::move(loop));
    return piece;
}

}  // namespace

Bisection clip_by_chord(const ConvexPolygon& poly, const Chord& chord) {
    if (dist(chord.p, chord.q) <= kEpsGeo * poly.perimeter())
        throw InvalidChord("clip_by_chord: endpoints coincide");

    const std::size_t n = poly.size();
    const auto& v = poly.vertices();
    const double tol = kEpsGeo * std::max(1.0, poly.scale());

    const auto [e1, p] = poly.boundary_edge_point(chord.s);
    const auto [e2, q] = poly.boundary_edge_point(chord.t);

    auto walk = [&](std::size_t from_edge, std::size_t to_edge, const Vec2& start,
                    const Vec2& stop, double from_param, double to_param) {
        std::vector<Vec2> loop;
        std::size_t cnt = (to_edge + n - from_edge) % n;
        // Same edge with wrapped order: the arc passes every vertex.
        if (from_edge == to_edge && to_param < from_param) cnt = n;
        loop.reserve(cnt + 2);
        loop.push_back(start);
        for (std::size_t k = 1; k <= cnt; ++k) {
            const Vec2& vert = v[(from_edge + k) % n];
            if (dist(loop.back(), vert) > tol) loop.push_back(vert);
        }
        if (dist(loop.back(), stop) > tol && dist(loop.front(), stop) > tol)
            loop.push_back(stop);
        return loop;
    };

    Bisection b;
    b.chord = chord;
    b.chord.p = p;
    b.chord.q = q;
    b.parent_area = poly.area();
    const double sp = chord.s - std::floor(chord.s);
    const double tp = chord.t - std::floor(chord.t);
    b.piece1 = build_piece(poly, walk(e1, e2, p, q, sp, tp), p, q);
    b.piece2 = build_piece(poly, walk(e2, e1, q, p, tp, sp), q, p);
    return b;
}

}  // namespace fairsect
