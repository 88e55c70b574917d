#include "fairsect/position.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "fairsect/errors.hpp"
#include "fairsect/parallel.hpp"

namespace fairsect {

namespace {

const double kPi = std::acos(-1.0);

double sq(double x) { return x * x; }

}  // namespace

std::string functional_name(QuotientFunctional f) {
    switch (f) {
        case QuotientFunctional::AreaOverDiamSq: return "A/D^2";
        case QuotientFunctional::AreaOverBisectDiamSq: return "A/D_B^2";
        case QuotientFunctional::AreaOverWidthSq: return "A/w^2";
        case QuotientFunctional::AreaOverBisectWidthSq: return "A/w_B^2";
    }
    return "?";
}

OptimizeSense natural_sense(QuotientFunctional f) {
    switch (f) {
        case QuotientFunctional::AreaOverDiamSq:
        case QuotientFunctional::AreaOverBisectDiamSq:
            return OptimizeSense::Max;
        default:
            return OptimizeSense::Min;
    }
}

namespace {

double quotient_of(const ConvexPolygon& img, QuotientFunctional f,
                   const BisectOptions& inner) {
    const double a = img.area();
    switch (f) {
        case QuotientFunctional::AreaOverDiamSq:
            return a / sq(diameter(img).value);
        case QuotientFunctional::AreaOverBisectDiamSq:
            return a / sq(min_bisect_diameter(img, inner).value);
        case QuotientFunctional::AreaOverWidthSq:
            return a / sq(width(img).value);
        case QuotientFunctional::AreaOverBisectWidthSq:
            return a / sq(width(img).value / 2.0);
    }
    return 0.0;
}

}  // namespace

PositionReport optimize_position(const ConvexPolygon& poly, QuotientFunctional functional,
                                 OptimizeSense sense, const PositionOptions& opts) {
    if (sense != natural_sense(functional))
        throw std::invalid_argument("optimize_position: sense does not match functional");

    const AffineMap center = AffineMap::translation_by(-poly.centroid());
    const ConvexPolygon centered = affine_apply(center, poly);

    auto evaluate = [&](double r, double alpha) {
        const ConvexPolygon img = affine_apply(AffineMap::unimodular(r, alpha), centered);
        return quotient_of(img, functional, opts.inner);
    };
    const bool maximize = sense == OptimizeSense::Max;
    auto better = [&](double a, double b) { return maximize ? a > b : a < b; };

    const double rho_max = std::log(opts.r_max);
    const int nr = std::max(2, opts.r_points);
    const int na = std::max(2, opts.alpha_points);

    // Grid scan, alpha-major in memory, reduced in index order.
    std::vector<double> grid(static_cast<std::size_t>(nr) * na);
    parallel_for(static_cast<std::size_t>(nr), opts.threads, [&](std::size_t k) {
        const double r = std::exp(rho_max * k / (nr - 1));
        for (int j = 0; j < na; ++j)
            grid[k * na + j] = evaluate(r, j * kPi / na);
    });
    std::size_t best_idx = 0;
    for (std::size_t idx = 1; idx < grid.size(); ++idx) {
        if (better(grid[idx], grid[best_idx])) best_idx = idx;
    }
    double rho = rho_max * (best_idx / na) / (nr - 1);
    double alpha = (best_idx % na) * kPi / na;
    double value = grid[best_idx];

    PositionReport report;
    report.functional = functional;
    report.sense = sense;
    report.trace.push_back({std::exp(rho), alpha, value});

    // Pattern search on (log r, alpha). The poll set rotates as the mesh
    // shrinks so kinked valleys that run between fixed poll directions
    // cannot stall the search.
    double h_rho = rho_max / (nr - 1);
    double h_alpha = kPi / na;
    int level = 0;
    const int poll = 16;
    while (std::max(h_rho, h_alpha) >= opts.param_tol) {
        double cand_v = value;
        double cand_rho = rho, cand_alpha = alpha;
        const double spin = 0.5 * level * (std::sqrt(5.0) - 1.0);
        for (int d = 0; d < poll; ++d) {
            const double ang = 2.0 * kPi * (d + spin) / poll;
            double nrho = std::clamp(rho + std::cos(ang) * h_rho, 0.0, rho_max);
            double nalpha = alpha + std::sin(ang) * h_alpha;
            nalpha = std::fmod(nalpha, kPi);
            if (nalpha < 0.0) nalpha += kPi;
            const double v = evaluate(std::exp(nrho), nalpha);
            if (better(v, cand_v)) {
                cand_v = v;
                cand_rho = nrho;
                cand_alpha = nalpha;
            }
        }
        if (better(cand_v, value)) {
            value = cand_v;
            rho = cand_rho;
            alpha = cand_alpha;
            report.trace.push_back({std::exp(rho), alpha, value});
        } else {
            h_rho *= 0.5;
            h_alpha *= 0.5;
            ++level;
        }
    }

    // Nelder-Mead polish: the quotient is a max/min of smooth sheets, and
    // its kinked valleys can curve between poll directions; an adaptive
    // simplex follows them to the bottom.
    {
        struct Pt {
            double rho, alpha, v;
        };
        auto feval = [&](double prho, double palpha) {
            prho = std::clamp(prho, 0.0, rho_max);
            palpha = std::fmod(palpha, kPi);
            if (palpha < 0.0) palpha += kPi;
            const double raw = evaluate(std::exp(prho), palpha);
            return maximize ? -raw : raw;  // minimize internally
        };
        const double init = 32.0 * opts.param_tol + 1e-3;
        std::array<Pt, 3> s{Pt{rho, alpha, feval(rho, alpha)},
                            Pt{rho + init, alpha, feval(rho + init, alpha)},
                            Pt{rho, alpha + init, feval(rho, alpha + init)}};
        for (int iter = 0; iter < 400; ++iter) {
            std::sort(s.begin(), s.end(),
                      [](const Pt& a, const Pt& b) { return a.v < b.v; });
            const double size = std::max(
                std::hypot(s[1].rho - s[0].rho, s[1].alpha - s[0].alpha),
                std::hypot(s[2].rho - s[0].rho, s[2].alpha - s[0].alpha));
            if (size < 0.25 * opts.param_tol) break;
            const double crho = (s[0].rho + s[1].rho) / 2.0;
            const double calpha = (s[0].alpha + s[1].alpha) / 2.0;
            Pt refl{crho + (crho - s[2].rho), calpha + (calpha - s[2].alpha), 0.0};
            refl.v = feval(refl.rho, refl.alpha);
            if (refl.v < s[0].v) {
                Pt expd{crho + 2.0 * (crho - s[2].rho),
                        calpha + 2.0 * (calpha - s[2].alpha), 0.0};
                expd.v = feval(expd.rho, expd.alpha);
                s[2] = expd.v < refl.v ? expd : refl;
            } else if (refl.v < s[1].v) {
                s[2] = refl;
            } else {
                Pt contr{crho + 0.5 * (s[2].rho - crho),
                         calpha + 0.5 * (s[2].alpha - calpha), 0.0};
                contr.v = feval(contr.rho, contr.alpha);
                if (contr.v < s[2].v) {
                    s[2] = contr;
                } else {
                    for (int k = 1; k < 3; ++k) {
                        s[k].rho = (s[k].rho + s[0].rho) / 2.0;
                        s[k].alpha = (s[k].alpha + s[0].alpha) / 2.0;
                        s[k].v = feval(s[k].rho, s[k].alpha);
                    }
                }
            }
        }
        std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) { return a.v < b.v; });
        const double polished = maximize ? -s[0].v : s[0].v;
        if (better(polished, value)) {
            rho = std::clamp(s[0].rho, 0.0, rho_max);
            alpha = std::fmod(s[0].alpha, kPi);
            if (alpha < 0.0) alpha += kPi;
            value = polished;
            report.trace.push_back({std::exp(rho), alpha, value});
        }
    }

    // Full-budget re-evaluation at the winning map.
    const double r_star = std::exp(rho);
    const AffineMap map = compose(AffineMap::unimodular(r_star, alpha), center);
    const ConvexPolygon img = affine_apply(map, poly);
    report.map = map;
    report.r = r_star;
    report.alpha = alpha;
    report.quotient = quotient_of(img, functional, opts.final_inner);
    report.trace.push_back({r_star, alpha, report.quotient});
    return report;
}

double lambda_m(double theta) {
    if (!(theta > 0.0) || theta > kPi / 3.0 + 1e-12)
        throw DomainError("lambda_m: theta outside (0, pi/3]");
    const double tg = std::tan((kPi - theta) / 2.0);
    const double t2 = tg * tg;
    if (t2 <= 1.0) throw DomainError("lambda_m: formula requires tan^2 > 1");
    return (1.0 + t2) / (2.0 * (t2 - 1.0));
}

double isosceles_quotient(double theta) {
    if (!(theta > 0.0) || !(theta < kPi))
        throw DomainError("isosceles_quotient: theta outside (0, pi)");
    if (theta <= kPi / 3.0) {
        const double c = std::cos(theta);
        return 2.0 * c * c * std::sin(theta);
    }
    return std::sin(theta) / 2.0;
}

double area_profile(double b) {
    if (b < -1e-15 || b > 0.5 + 1e-15)
        throw DomainError("area_profile: b outside [0, 1/2]");
    b = std::clamp(b, 0.0, 0.5);
    const double s1 = std::sqrt(std::max(0.0, 1.0 - 4.0 * b * b));
    const double s2 = std::sqrt(std::max(0.0, 1.0 - b * b));
    return 2.0 * (2.0 * b * s1 - b * s2 + std::atan2(2.0 * b, s1) - std::atan2(b, s2));
}

std::pair<double, double> argmax_area_profile() {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 0.5;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = area_profile(x1);
    double f2 = area_profile(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = area_profile(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = area_profile(x1);
        }
    }
    const double b = (lo + hi) / 2.0;
    return {b, area_profile(b)};
}

}  // namespace fairsect
