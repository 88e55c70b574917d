#include "fairsect/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "fairsect/errors.hpp"

namespace fairsect {

namespace {

bool lex_less(const Vec2& a, const Vec2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

double cloud_scale(std::span<const Vec2> pts) {
    if (pts.empty()) return 1.0;
    Vec2 lo = pts[0], hi = pts[0];
    for (const Vec2& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return std::max(1.0, (hi - lo).norm());
}

}  // namespace

double shoelace_area(std::span<const Vec2> pts) {
    double twice = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        twice += a.cross(b);
    }
    return twice / 2.0;
}

ConvexPolygon ConvexPolygon::canonicalize(std::vector<Vec2> points) {
    if (points.size() < 3) throw DegenerateInput("canonicalize: fewer than 3 points");
    for (const Vec2& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateInput("canonicalize: non-finite coordinate");
    }
    const double tol_len = kEpsGeo * cloud_scale(points);

    std::sort(points.begin(), points.end(), lex_less);
    std::vector<Vec2> pts;
    pts.reserve(points.size());
    for (const Vec2& p : points) {
        if (pts.empty() || dist(pts.back(), p) > tol_len) pts.push_back(p);
    }
    if (pts.size() < 3) throw DegenerateInput("canonicalize: all points coincide");

    // Monotone chain with strict turns: collinear points are dropped.
    auto strict_left = [&](const Vec2& a, const Vec2& b, const Vec2& c) {
        return cross3(a, b, c) > tol_len * dist(a, c);
    };
    std::vector<Vec2> hull;
    hull.reserve(pts.size() + 1);
    for (const Vec2& p : pts) {  // lower hull
        while (hull.size() >= 2 && !strict_left(hull[hull.size() - 2], hull.back(), p))
            hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
        while (hull.size() >= lower && !strict_left(hull[hull.size() - 2], hull.back(), *it))
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();  // first point repeated

    if (hull.size() < 3) throw DegenerateInput("canonicalize: hull degenerate");

    ConvexPolygon poly;
    poly.verts_ = std::move(hull);
    poly.finalize();
    const double tol_area = kEpsGeo * cloud_scale(poly.verts_);
    if (poly.area_ <= tol_area)
        throw DegenerateInput("canonicalize: area below tolerance");
    return poly;
}

ConvexPolygon ConvexPolygon::from_boundary_loop(std::vector<Vec2> loop) {
    if (loop.size() < 3) throw DegenerateInput("boundary loop: fewer than 3 points");
    const double tol_len = kEpsGeo * cloud_scale(loop);

    // Drop consecutive duplicates, including across the wrap.
    std::vector<Vec2> pts;
    pts.reserve(loop.size());
    for (const Vec2& p : loop) {
        if (pts.empty() || dist(pts.back(), p) > tol_len) pts.push_back(p);
    }
    while (pts.size() > 1 && dist(pts.front(), pts.back()) <= tol_len) pts.pop_back();
    if (pts.size() < 3) throw DegenerateInput("boundary loop: degenerate");

    if (shoelace_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());

    // Convex within tolerance; exactly collinear runs are allowed.
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[(i + n - 1) % n];
        const Vec2& b = pts[i];
        const Vec2& c = pts[(i + 1) % n];
        if (cross3(a, b, c) < -tol_len * dist(a, c) * 8.0)
            throw DegenerateInput("boundary loop: reflex turn");
    }

    ConvexPolygon poly;
    poly.verts_ = std::move(pts);
    poly.finalize();
    if (poly.area_ <= kEpsGeo * cloud_scale(poly.verts_))
        throw DegenerateInput("boundary loop: area below tolerance");
    return poly;
}

void ConvexPolygon::finalize() {
    // Rotate so the lexicographically smallest vertex comes first.
    auto first = std::min_element(verts_.begin(), verts_.end(), lex_less);
    std::rotate(verts_.begin(), first, verts_.end());

    const std::size_t n = verts_.size();
    area_ = shoelace_area(verts_);

    cums_.assign(n + 1, 0.0);
    bbox_min_ = bbox_max_ = verts_[0];
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        cums_[i + 1] = cums_[i] + dist(a, b);
        const double w = a.cross(b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
        bbox_min_.x = std::min(bbox_min_.x, a.x);
        bbox_min_.y = std::min(bbox_min_.y, a.y);
        bbox_max_.x = std::max(bbox_max_.x, a.x);
        bbox_max_.y = std::max(bbox_max_.y, a.y);
    }
    perimeter_ = cums_[n];
    if (area_ != 0.0) {
        centroid_ = {cx / (6.0 * area_), cy / (6.0 * area_)};
    } else {
        centroid_ = verts_[0];
    }
}

Vec2 ConvexPolygon::boundary_point(double t) const {
    return boundary_edge_point(t).second;
}

std::pair<std::size_t, Vec2> ConvexPolygon::boundary_edge_point(double t) const {
    t -= std::floor(t);
    const double target = t * perimeter_;
    auto it = std::upper_bound(cums_.begin(), cums_.end(), target);
    std::size_t i = (it == cums_.begin()) ? 0 : static_cast<std::size_t>(it - cums_.begin()) - 1;
    const std::size_t n = verts_.size();
    if (i >= n) i = n - 1;
    const double len = cums_[i + 1] - cums_[i];
    const double frac = len > 0.0 ? (target - cums_[i]) / len : 0.0;
    const Vec2& a = verts_[i];
    const Vec2& b = verts_[(i + 1) % n];
    return {i, a + (b - a) * frac};
}

double ConvexPolygon::parameter_at(std::size_t edge, double frac) const {
    const double len = cums_[edge + 1] - cums_[edge];
    double t = (cums_[edge] + frac * len) / perimeter_;
    if (t >= 1.0) t -= 1.0;
    if (t < 0.0) t += 1.0;
    return t;
}

std::pair<double, double> ConvexPolygon::boundary_parameter_near(const Vec2& p) const {
    const std::size_t n = verts_.size();
    double best_d2 = std::numeric_limits<double>::infinity();
    std::size_t best_edge = 0;
    double best_frac = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = verts_[i];
        const Vec2& b = verts_[(i + 1) % n];
        const Vec2 e = b - a;
        const double len2 = e.norm2();
        double frac = len2 > 0.0 ? std::clamp((p - a).dot(e) / len2, 0.0, 1.0) : 0.0;
        const Vec2 cand = a + e * frac;
        const double d2 = dist2(p, cand);
        if (d2 < best_d2) {
            best_d2 = d2;
            best_edge = i;
            best_frac = frac;
        }
    }
    return {parameter_at(best_edge, best_frac), std::sqrt(best_d2)};
}

namespace {

// Support drops of up to kAdvanceRel * scale per step are walked through:
// pieces of clipped polygons carry tolerance-level reflex dips at the chord
// junction vertices, and a strict stop there would strand the antipodal
// pointer far from its target.
constexpr double kAdvanceRel = 1e-9;

double ring_scale(std::span<const Vec2> pts) {
    Vec2 lo = pts[0], hi = pts[0];
    for (const Vec2& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    return std::max(1e-300, (hi - lo).norm());
}

}  // namespace

DiameterResult ring_diameter(std::span<const Vec2> pts) {
    const std::size_t n = pts.size();
    if (n == 0) return {};
    if (n == 1) return {0.0, 0, 0};
    if (n == 2) return {dist(pts[0], pts[1]), 0, 1};

    const double tol = kAdvanceRel * ring_scale(pts);
    const double tol2 = tol * tol;

    double best_d2 = -1.0;
    std::size_t bi = 0, bj = 0;
    auto consider = [&](std::size_t a, std::size_t b) {
        const double d2 = dist2(pts[a], pts[b]);
        if (d2 > best_d2) {
            best_d2 = d2;
            bi = std::min(a, b);
            bj = std::max(a, b);
        }
    };

    std::size_t j = 1;
    std::size_t advances = 0;
    const std::size_t max_adv = 3 * n + 4;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ni = (i + 1) % n;
        const Vec2 e = pts[ni] - pts[i];
        for (;;) {
            const std::size_t jm = j % n;
            consider(i, jm);
            consider(ni, jm);
            const Vec2 step = pts[(j + 1) % n] - pts[jm];
            const double c = e.cross(step);
            const bool advance = c >= 0.0 || c * c <= tol2 * e.norm2();
            if (advance && advances < max_adv) {
                ++j;
                ++advances;
            } else {
                break;
            }
        }
    }
    return {std::sqrt(best_d2), bi, bj};
}

WidthResult ring_width(std::span<const Vec2> pts) {
    const std::size_t n = pts.size();
    WidthResult res;
    if (n < 3) {
        res.value = 0.0;
        if (n == 2) res.direction = (pts[1] - pts[0]).perp().normalized();
        return res;
    }

    const double tol = kAdvanceRel * ring_scale(pts);
    const double tol2 = tol * tol;

    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 1;
    std::size_t advances = 0;
    const std::size_t max_adv = 3 * n + 4;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ni = (i + 1) % n;
        const Vec2 e = pts[ni] - pts[i];
        const double elen = e.norm();
        if (elen == 0.0) continue;
        // Track the farthest vertex over everything the pointer visits for
        // this edge; tolerated dips may overshoot the stop position.
        double far = cross3(pts[i], pts[ni], pts[j % n]);
        std::size_t far_at = j % n;
        for (;;) {
            const Vec2 step = pts[(j + 1) % n] - pts[j % n];
            const double c = e.cross(step);
            const bool advance = c >= 0.0 || c * c <= tol2 * e.norm2();
            if (advance && advances < max_adv) {
                ++j;
                ++advances;
                const double cand = cross3(pts[i], pts[ni], pts[j % n]);
                if (cand > far) {
                    far = cand;
                    far_at = j % n;
                }
            } else {
                break;
            }
        }
        const double support = far / elen;
        if (support < best) {
            best = support;
            res.edge = i;
            res.vertex = far_at;
            const Vec2 outer = Vec2{e.y, -e.x} / elen;
            const double ang = direction_angle(outer);
            res.direction = {std::cos(ang), std::sin(ang)};
        }
    }
    res.value = std::max(0.0, best);
    return res;
}

PolygonDiameter diameter(const ConvexPolygon& p) {
    const DiameterResult r = ring_diameter(p.vertices());
    return {r.value, r.i, r.j};
}

PolygonWidth width(const ConvexPolygon& p) {
    const WidthResult r = ring_width(p.vertices());
    return {r.value, r.direction, r.edge, r.vertex};
}

std::optional<Vec2> is_centrally_symmetric(const ConvexPolygon& p, double tol) {
    const std::size_t n = p.size();
    if (n % 2 != 0) return std::nullopt;
    const Vec2 c = p.centroid();
    const double d = diameter(p).value;
    const double limit = tol * d;

    const auto& v = p.vertices();
    const Vec2 r0 = c * 2.0 - v[0];
    std::size_t k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double di = dist(r0, v[i]);
        if (di < best) {
            best = di;
            k = i;
        }
    }
    if (best > limit) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 r = c * 2.0 - v[i];
        if (dist(r, v[(k + i) % n]) > limit) return std::nullopt;
    }
    return c;
}

}  // namespace fairsect
