#pragma once

#include "fairsect/polygon.hpp"

namespace fairsect {

/// Steiner symmetral about the line through the origin spanned by u: every
/// chord perpendicular to u keeps its length but is re-centered on lin(u).
/// Area is preserved, diameter does not increase, vertex count at most
/// doubles.
ConvexPolygon steiner_symmetrize(const ConvexPolygon& poly, const Vec2& u);

}  // namespace fairsect
