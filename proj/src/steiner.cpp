#include "fairsect/steiner.hpp"

#include <algorithm>
#include <cmath>

#include "fairsect/errors.hpp"

namespace fairsect {

ConvexPolygon steiner_symmetrize(const ConvexPolygon& poly, const Vec2& u) {
    const double un = u.norm();
    if (un <= 0.0) throw DomainError("steiner_symmetrize: zero direction");
    const Vec2 axis = u / un;                  // symmetry axis through the origin
    const Vec2 across{axis.y, -axis.x};        // chord direction (axis^perp)

    // Work in the frame (across, axis): x across the axis, y along it.
    const std::size_t n = poly.size();
    std::vector<Vec2> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = poly.vertices()[i];
        w[i] = {p.dot(across), p.dot(axis)};
    }

    const double tol = kEpsGeo * std::max(1.0, poly.scale());
    std::vector<double> heights;
    heights.reserve(n);
    for (const Vec2& p : w) heights.push_back(p.y);
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end(),
                              [&](double a, double b) { return b - a <= tol; }),
                  heights.end());

    // Slice [xlo, xhi] at height y; every critical height meets at least
    // one edge because y lies within the vertex range.
    auto slice = [&](double y, double& xlo, double& xhi) {
        xlo = std::numeric_limits<double>::infinity();
        xhi = -xlo;
        auto take = [&](double x) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
        };
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = w[i];
            const Vec2& b = w[(i + 1) % n];
            const double da = a.y - y;
            const double db = b.y - y;
            if (da == 0.0) take(a.x);  // each on-line vertex via its outgoing edge
            if (da == 0.0 || db == 0.0) continue;
            if ((da > 0.0) == (db > 0.0)) continue;
            const double frac = da / (da - db);
            take(a.x + (b.x - a.x) * frac);
        }
        if (xlo > xhi) xlo = xhi = 0.0;
    };

    std::vector<Vec2> out;
    out.reserve(2 * heights.size());
    for (double y : heights) {  // right chain, bottom to top
        double xlo, xhi;
        slice(y, xlo, xhi);
        out.push_back({(xhi - xlo) / 2.0, y});
    }
    for (auto it = heights.rbegin(); it != heights.rend(); ++it) {  // left chain
        double xlo, xhi;
        slice(*it, xlo, xhi);
        out.push_back({-(xhi - xlo) / 2.0, *it});
    }

    std::vector<Vec2> back;
    back.reserve(out.size());
    for (const Vec2& p : out) back.push_back(across * p.x + axis * p.y);
    return ConvexPolygon::canonicalize(std::move(back));
}

}  // namespace fairsect
