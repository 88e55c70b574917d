#pragma once

#include <map>
#include <string>
#include <vector>

#include "fairsect/polygon.hpp"

namespace fairsect {

/// Known exact quantity attached to a catalog entry, with the tolerance at
/// which the polygonal approximation reproduces it.
struct ReferenceValue {
    double value = 0.0;
    double tol = 0.0;
    std::string source;  // "exact" | "closed-form" | "limit-shape"
};

struct CatalogEntry {
    std::string name;
    std::map<std::string, double> params;
    ConvexPolygon polygon;
    double approx_error_area = 0.0;  // 0 for exact polygons
    std::map<std::string, ReferenceValue> reference_values;
};

/// Lens-with-flats body: |x1| <= 1/sqrt(5) intersected with the two unit
/// disks centered at (+-1/sqrt(5), 0). Each of the four boundary arcs is
/// sampled at ceil(n/2) uniform angular steps including endpoints; the
/// points (+-1/sqrt(5), 0) are kept as exact vertices on the vertical
/// edges. Inscribed, so the area under-approximates by O(1/n^2).
CatalogEntry make_Q(int n);

/// Flat-sided profile body with half-separation a in (0, 1/2): region
/// between the unit disks centered at (+-a, 0) and the vertical lines
/// x = +-a. Same sampling scheme as make_Q.
CatalogEntry make_R(double a, int n);

/// Symmetric lens: intersection of the unit disks centered at (+-a, 0),
/// a in (0, 1).
CatalogEntry make_lens(double a, int n);

/// Isosceles triangle with apex angle theta at (0, tan((pi-theta)/2)) over
/// the base (-1,0)-(1,0).
CatalogEntry make_isosceles(double theta);

CatalogEntry make_equilateral(double side);
CatalogEntry make_rect(double a, double b);
CatalogEntry make_square(double side);
CatalogEntry make_parallelogram(double base, double side, double angle);
CatalogEntry make_regular_ngon(int k, double circumradius);
CatalogEntry make_disk(int n, double r);

/// Convex hull of k points drawn from a seeded deterministic generator on
/// the unit disk; retries up to 16 draws before failing.
CatalogEntry random_polygon(std::uint64_t seed, int k);
/// Mirrors the point set through the origin before hulling, so the result
/// is exactly centrally symmetric about (0, 0).
CatalogEntry random_symmetric_polygon(std::uint64_t seed, int k);

struct CatalogSchema {
    std::string name;
    std::vector<std::string> params;
    std::string note;
};
std::vector<CatalogSchema> catalog_schemas();

/// Dispatch by name with named parameters; unknown names throw ParseError,
/// bad parameter values throw DomainError.
CatalogEntry make_catalog(const std::string& name,
                          const std::map<std::string, double>& params);

}  // namespace fairsect
