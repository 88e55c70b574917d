#include "fairsect/affine.hpp"

#include <cmath>

#include "fairsect/errors.hpp"

namespace fairsect {

AffineMap AffineMap::rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    AffineMap m;
    m.a = c; m.b = -s;
    m.c = s; m.d = c;
    return m;
}

AffineMap AffineMap::scaling(double sx, double sy) {
    AffineMap m;
    m.a = sx; m.d = sy;
    return m;
}

AffineMap AffineMap::translation_by(const Vec2& t) {
    AffineMap m;
    m.translation = t;
    return m;
}

AffineMap AffineMap::unimodular(double r, double alpha) {
    // R(alpha)^T diag(r, 1/r) R(alpha)
    const double c = std::cos(alpha), s = std::sin(alpha);
    const double ri = 1.0 / r;
    AffineMap m;
    m.a = c * c * r + s * s * ri;
    m.b = c * s * (r - ri);
    m.c = m.b;
    m.d = s * s * r + c * c * ri;
    return m;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    AffineMap m;
    m.a = outer.a * inner.a + outer.b * inner.c;
    m.b = outer.a * inner.b + outer.b * inner.d;
    m.c = outer.c * inner.a + outer.d * inner.c;
    m.d = outer.c * inner.b + outer.d * inner.d;
    const Vec2 t = outer.apply(inner.translation);
    m.translation = t;
    return m;
}

ConvexPolygon affine_apply(const AffineMap& m, const ConvexPolygon& poly) {
    if (std::abs(m.det()) <= kEpsGeo) throw SingularMap("affine_apply: |det| too small");
    std::vector<Vec2> image;
    image.reserve(poly.size());
    for (const Vec2& v : poly.vertices()) image.push_back(m.apply(v));
    // A negative determinant flips orientation; re-hulling restores the
    // canonical CCW order either way.
    return ConvexPolygon::canonicalize(std::move(image));
}

}  // namespace fairsect
