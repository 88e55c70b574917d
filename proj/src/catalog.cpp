#include "fairsect/catalog.hpp"

#include <cmath>
#include <random>

#include "fairsect/errors.hpp"

namespace fairsect {

namespace {

const double kPi = std::acos(-1.0);
const double kInvSqrt5 = 1.0 / std::sqrt(5.0);

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

// Arc of the unit circle centered at `center`, interior sample points only
// (both endpoints are emitted separately as exact vertices).
void append_arc_interior(std::vector<Vec2>& out, const Vec2& center, double phi0,
                         double phi1, int segments) {
    for (int k = 1; k < segments; ++k) {
        const double phi = phi0 + (phi1 - phi0) * k / segments;
        out.push_back(center + Vec2{std::cos(phi), std::sin(phi)});
    }
}

// Inscribed-polygon area deficit of a unit-circle arc of angle span `span`
// split into `segments` chords.
double arc_deficit(double span, int segments) {
    const double step = span / segments;
    return segments * (step - std::sin(step)) / 2.0;
}

CatalogEntry flat_profile_body(const std::string& name, double a, int n) {
    if (!(a > 0.0) || !(a < 0.5)) throw DomainError(name + ": a outside (0, 1/2)");
    if (n < 8) throw DomainError(name + ": n < 8");

    const double y_edge = std::sqrt(1.0 - 4.0 * a * a);  // vertical edge half-height
    const double y_top = std::sqrt(1.0 - a * a);         // apex height
    const double phi_lo = std::atan2(y_edge, 2.0 * a);   // arc angle at the edge corner
    const double phi_hi = std::atan2(y_top, a);          // arc angle at the apex
    const int m = std::max(2, (n + 1) / 2);              // segments per quarter arc

    const Vec2 cl{-a, 0.0}, cr{a, 0.0};
    std::vector<Vec2> loop;
    loop.reserve(4 * m + 8);
    // Right vertical edge, bottom to top, with the mid point pinned.
    loop.push_back({a, -y_edge});
    loop.push_back({a, 0.0});
    loop.push_back({a, y_edge});
    // Top-right arc (center -a) up to the apex.
    append_arc_interior(loop, cl, phi_lo, phi_hi, m);
    loop.push_back({0.0, y_top});
    // Top-left arc (center +a) down to the left corner.
    append_arc_interior(loop, cr, kPi - phi_hi, kPi - phi_lo, m);
    loop.push_back({-a, y_edge});
    loop.push_back({-a, 0.0});
    loop.push_back({-a, -y_edge});
    // Bottom-left arc (center +a).
    append_arc_interior(loop, cr, kPi + phi_lo, kPi + phi_hi, m);
    loop.push_back({0.0, -y_top});
    // Bottom-right arc (center -a).
    append_arc_interior(loop, cl, -phi_hi, -phi_lo, m);

    CatalogEntry e;
    e.name = name;
    e.params = {{"a", a}, {"n", double(n)}};
    e.polygon = ConvexPolygon::from_boundary_loop(std::move(loop));
    e.approx_error_area = 4.0 * arc_deficit(phi_hi - phi_lo, m);

    const double area_exact =
        2.0 * (2.0 * a * y_edge - a * y_top + std::atan2(2.0 * a, y_edge) -
               std::atan2(a, y_top));
    e.reference_values["area"] = {area_exact, e.approx_error_area + 1e-12, "closed-form"};
    e.reference_values["diameter"] = {2.0 * y_top, 1e-9, "exact"};
    e.reference_values["width"] = {2.0 * a, 1e-9, "exact"};
    e.reference_values["d_b"] = {1.0, 1e-6, "closed-form"};
    e.reference_values["w_b"] = {a, 1e-9, "exact"};
    return e;
}

}  // namespace

CatalogEntry make_Q(int n) {
    CatalogEntry e = flat_profile_body("Q", kInvSqrt5, n);
    e.params = {{"n", double(n)}};
    e.reference_values["area"].value = 2.0 * std::atan(0.75);
    return e;
}

CatalogEntry make_R(double a, int n) { return flat_profile_body("R", a, n); }

CatalogEntry make_lens(double a, int n) {
    if (!(a > 0.0) || !(a < 1.0)) throw DomainError("lens: a outside (0, 1)");
    if (n < 8) throw DomainError("lens: n < 8");
    const double y_top = std::sqrt(1.0 - a * a);
    const double phi = std::atan2(y_top, a);  // arc half-angle
    const Vec2 cl{-a, 0.0}, cr{a, 0.0};

    std::vector<Vec2> loop;
    loop.reserve(2 * n + 4);
    loop.push_back({0.0, -y_top});
    append_arc_interior(loop, cl, -phi, phi, n);  // right arc
    loop.push_back({0.0, y_top});
    append_arc_interior(loop, cr, kPi - phi, kPi + phi, n);  // left arc

    CatalogEntry e;
    e.name = "lens";
    e.params = {{"a", a}, {"n", double(n)}};
    e.polygon = ConvexPolygon::from_boundary_loop(std::move(loop));
    e.approx_error_area = 2.0 * arc_deficit(2.0 * phi, n);

    const double area_exact = 2.0 * std::acos(a) - 2.0 * a * y_top;
    e.reference_values["area"] = {area_exact, e.approx_error_area + 1e-12, "closed-form"};
    e.reference_values["diameter"] = {2.0 * y_top, 1e-9, "exact"};
    e.reference_values["width"] = {2.0 * (1.0 - a), e.approx_error_area + 1e-9, "limit-shape"};
    if (std::abs(a - 0.5) < 1e-12) {
        e.reference_values["d_b"] = {1.0, 1e-6, "closed-form"};
    }
    return e;
}

CatalogEntry make_isosceles(double theta) {
    if (!(theta > 0.0) || !(theta < kPi))
        throw DomainError("isosceles: theta outside (0, pi)");
    const double apex = std::tan((kPi - theta) / 2.0);
    CatalogEntry e;
    e.name = "isosceles";
    e.params = {{"theta", theta}};
    e.polygon = ConvexPolygon::canonicalize({{1.0, 0.0}, {-1.0, 0.0}, {0.0, apex}});
    const double leg = std::sqrt(1.0 + apex * apex);
    e.reference_values["area"] = {apex, 1e-12, "exact"};
    e.reference_values["diameter"] = {std::max(2.0, leg), 1e-12, "exact"};
    e.reference_values["width"] =
        {theta <= kPi / 3.0 ? 2.0 * apex / leg : apex, 1e-12, "exact"};
    return e;
}

CatalogEntry make_equilateral(double side) {
    if (!(side > 0.0)) throw DomainError("equilateral: side <= 0");
    const double h = side * std::sqrt(3.0) / 2.0;
    CatalogEntry e;
    e.name = "equilateral";
    e.params = {{"side", side}};
    e.polygon = ConvexPolygon::canonicalize(
        {{-side / 2.0, 0.0}, {side / 2.0, 0.0}, {0.0, h}});
    e.reference_values["area"] = {std::sqrt(3.0) / 4.0 * side * side, 1e-12, "exact"};
    e.reference_values["diameter"] = {side, 1e-12, "exact"};
    e.reference_values["width"] = {h, 1e-12, "exact"};
    e.reference_values["d_b"] = {side, 1e-6, "closed-form"};
    e.reference_values["w_b"] = {h / 2.0, 1e-12, "exact"};
    return e;
}

CatalogEntry make_rect(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("rect: non-positive side");
    CatalogEntry e;
    e.name = "rect";
    e.params = {{"a", a}, {"b", b}};
    e.polygon = ConvexPolygon::canonicalize({{-a / 2.0, -b / 2.0},
                                             {a / 2.0, -b / 2.0},
                                             {a / 2.0, b / 2.0},
                                             {-a / 2.0, b / 2.0}});
    const double lo = std::min(a, b), hi = std::max(a, b);
    e.reference_values["area"] = {a * b, 1e-12, "exact"};
    e.reference_values["diameter"] = {std::hypot(a, b), 1e-12, "exact"};
    e.reference_values["width"] = {lo, 1e-12, "exact"};
    e.reference_values["d_b"] = {std::hypot(lo, hi / 2.0), 1e-6, "closed-form"};
    e.reference_values["w_b"] = {lo / 2.0, 1e-12, "exact"};
    return e;
}

CatalogEntry make_square(double side) {
    CatalogEntry e = make_rect(side, side);
    e.name = "square";
    e.params = {{"side", side}};
    return e;
}

CatalogEntry make_parallelogram(double base, double side, double angle) {
    if (!(base > 0.0) || !(side > 0.0)) throw DomainError("parallelogram: non-positive side");
    if (!(angle > 0.0) || !(angle < kPi)) throw DomainError("parallelogram: bad angle");
    const Vec2 u{base, 0.0};
    const Vec2 v{side * std::cos(angle), side * std::sin(angle)};
    CatalogEntry e;
    e.name = "parallelogram";
    e.params = {{"base", base}, {"side", side}, {"angle", angle}};
    e.polygon = ConvexPolygon::canonicalize({{0.0, 0.0}, u, u + v, v});
    const double diag1 = (u + v).norm();
    const double diag2 = (u - v).norm();
    e.reference_values["area"] = {base * side * std::sin(angle), 1e-12, "exact"};
    e.reference_values["diameter"] = {std::max(diag1, diag2), 1e-12, "exact"};
    return e;
}

CatalogEntry make_regular_ngon(int k, double circumradius) {
    if (k < 3) throw DomainError("ngon: k < 3");
    if (!(circumradius > 0.0)) throw DomainError("ngon: radius <= 0");
    std::vector<Vec2> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double ang = 2.0 * kPi * i / k;
        pts.push_back({circumradius * std::cos(ang), circumradius * std::sin(ang)});
    }
    CatalogEntry e;
    e.name = "ngon";
    e.params = {{"k", double(k)}, {"r", circumradius}};
    e.polygon = ConvexPolygon::canonicalize(std::move(pts));
    const double r = circumradius;
    e.reference_values["area"] = {k / 2.0 * r * r * std::sin(2.0 * kPi / k), 1e-12, "exact"};
    e.reference_values["diameter"] =
        {k % 2 == 0 ? 2.0 * r : 2.0 * r * std::cos(kPi / (2.0 * k)), 1e-12, "exact"};
    e.reference_values["width"] =
        {k % 2 == 0 ? 2.0 * r * std::cos(kPi / k) : r * (1.0 + std::cos(kPi / k)),
         1e-12, "exact"};
    return e;
}

CatalogEntry make_disk(int n, double r) {
    if (n < 8) throw DomainError("disk: n < 8");
    if (!(r > 0.0)) throw DomainError("disk: r <= 0");
    CatalogEntry e = make_regular_ngon(n, r);
    e.name = "disk";
    e.params = {{"n", double(n)}, {"r", r}};
    e.approx_error_area = kPi * r * r - n / 2.0 * r * r * std::sin(2.0 * kPi / n);
    e.reference_values["area"] = {kPi * r * r, e.approx_error_area + 1e-12, "limit-shape"};
    e.reference_values["diameter"] =
        {2.0 * r, 2.0 * r * (1.0 - std::cos(kPi / (2.0 * n))) + 1e-12, "limit-shape"};
    e.reference_values["width"] =
        {2.0 * r, 2.0 * r * (1.0 - std::cos(kPi / n)) + 1e-12, "limit-shape"};
    e.reference_values["d_b"] =
        {2.0 * r, 2.0 * r * (1.0 - std::cos(kPi / n)) + 1e-3 * r, "limit-shape"};
    return e;
}

namespace {

CatalogEntry random_body(std::uint64_t seed, int k, bool symmetric) {
    if (k < 3 || (symmetric && k % 2 != 0))
        throw DomainError("random polygon: bad vertex count");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return (rng() >> 11) * 0x1.0p-53;  // deterministic across platforms
    };
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Vec2> pts;
        const int draws = symmetric ? k / 2 : k;
        pts.reserve(symmetric ? k : draws);
        for (int i = 0; i < draws; ++i) {
            const double rad = std::sqrt(uniform());
            const double ang = 2.0 * kPi * uniform();
            pts.push_back({rad * std::cos(ang), rad * std::sin(ang)});
        }
        if (symmetric) {
            const std::size_t half = pts.size();
            for (std::size_t i = 0; i < half; ++i) pts.push_back(-pts[i]);
        }
        try {
            CatalogEntry e;
            e.name = symmetric ? "random_symmetric" : "random";
            e.params = {{"seed", double(seed)}, {"k", double(k)}};
            e.polygon = ConvexPolygon::canonicalize(std::move(pts));
            return e;
        } catch (const DegenerateInput&) {
            continue;
        }
    }
    throw DegenerateInput("random polygon: no non-degenerate draw in 16 attempts");
}

}  // namespace

CatalogEntry random_polygon(std::uint64_t seed, int k) {
    return random_body(seed, k, false);
}

CatalogEntry random_symmetric_polygon(std::uint64_t seed, int k) {
    return random_body(seed, k, true);
}

std::vector<CatalogSchema> catalog_schemas() {
    return {
        {"Q", {"n"}, "lens-with-flats body, n samples per arc"},
        {"R", {"a", "n"}, "flat-sided profile body, half-separation a in (0,1/2)"},
        {"lens", {"a", "n"}, "symmetric lens of unit disks centered at (+-a, 0)"},
        {"disk", {"n", "r"}, "inscribed regular n-gon of radius r"},
        {"isosceles", {"theta"}, "base (-1,0)-(1,0), apex angle theta"},
        {"equilateral", {"side"}, "equilateral triangle"},
        {"square", {"side"}, "axis-aligned square centered at the origin"},
        {"rect", {"a", "b"}, "axis-aligned rectangle centered at the origin"},
        {"parallelogram", {"base", "side", "angle"}, "origin-anchored parallelogram"},
        {"ngon", {"k", "r"}, "regular k-gon with circumradius r"},
        {"random", {"seed", "k"}, "seeded hull of k points on the unit disk"},
        {"random_symmetric", {"seed", "k"}, "seeded centrally symmetric hull, k even"},
    };
}

CatalogEntry make_catalog(const std::string& name,
                          const std::map<std::string, double>& params) {
    auto p = [&](const std::string& key, double fallback) {
        return get_param(params, key, fallback);
    };
    if (name == "Q") return make_Q(int(p("n", 1024)));
    if (name == "R") return make_R(p("a", 0.3), int(p("n", 512)));
    if (name == "lens") return make_lens(p("a", 0.5), int(p("n", 512)));
    if (name == "disk") return make_disk(int(p("n", 1024)), p("r", 1.0));
    if (name == "isosceles") return make_isosceles(p("theta", 0.4));
    if (name == "equilateral") return make_equilateral(p("side", 1.0));
    if (name == "square") return make_square(p("side", 1.0));
    if (name == "rect") return make_rect(p("a", 1.0), p("b", 2.0));
    if (name == "parallelogram")
        return make_parallelogram(p("base", 1.0), p("side", 1.0), p("angle", kPi / 3.0));
    if (name == "ngon") return make_regular_ngon(int(p("k", 6)), p("r", 1.0));
    if (name == "random")
        return random_polygon(std::uint64_t(p("seed", 1)), int(p("k", 16)));
    if (name == "random_symmetric")
        return random_symmetric_polygon(std::uint64_t(p("seed", 1)), int(p("k", 16)));
    throw ParseError("unknown catalog name: " + name);
}

}  // namespace fairsect
