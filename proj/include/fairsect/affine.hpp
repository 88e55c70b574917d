#pragma once

#include "fairsect/polygon.hpp"

namespace fairsect {

/// x -> M x + t with M = [[a, b], [c, d]].
struct AffineMap {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;
    Vec2 translation;

    double det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const {
        return {a * v.x + b * v.y + translation.x,
                c * v.x + d * v.y + translation.y};
    }

    static AffineMap identity() { return {}; }
    static AffineMap rotation(double angle);
    static AffineMap scaling(double sx, double sy);
    static AffineMap translation_by(const Vec2& t);
    /// R(alpha)^T diag(r, 1/r) R(alpha): the symmetric unimodular factor
    /// used by the position search.
    static AffineMap unimodular(double r, double alpha);
};

AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// Canonicalized image polygon; throws SingularMap if |det| <= kEpsGeo.
ConvexPolygon affine_apply(const AffineMap& m, const ConvexPolygon& poly);

}  // namespace fairsect
