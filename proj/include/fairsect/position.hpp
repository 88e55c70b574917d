#pragma once

#include <string>
#include <vector>

#include "fairsect/affine.hpp"
#include "fairsect/bisect.hpp"

namespace fairsect {

enum class QuotientFunctional {
    AreaOverDiamSq,        // A / D^2
    AreaOverBisectDiamSq,  // A / D_B^2
    AreaOverWidthSq,       // A / w^2
    AreaOverBisectWidthSq, // A / w_B^2
};

enum class OptimizeSense { Max, Min };

std::string functional_name(QuotientFunctional f);
OptimizeSense natural_sense(QuotientFunctional f);

struct PositionOptions {
    double r_max = 16.0;
    int r_points = 33;        // log-spaced on [1, r_max]
    int alpha_points = 64;    // uniform on [0, pi)
    double param_tol = 1e-7;  // pattern-search step floor on (log r, alpha)
    BisectOptions inner{48, 4, 1e-6, 1e-10, kNearRel, 0};  // reduced budget
    BisectOptions final_inner{};                            // full budget
    int threads = 0;
};

struct PositionReport {
    AffineMap map;
    double quotient = 0.0;
    QuotientFunctional functional = QuotientFunctional::AreaOverDiamSq;
    OptimizeSense sense = OptimizeSense::Max;
    struct TracePoint {
        double r;
        double alpha;
        double quotient;
    };
    std::vector<TracePoint> trace;
    double r = 1.0;
    double alpha = 0.0;
};

/// Optimizes the quotient over the unimodular family
/// M(r, alpha) = R(alpha)^T diag(r, 1/r) R(alpha) applied to the centered
/// body: grid scan, pattern search, then a full-budget re-evaluation at the
/// winning map. The sense must be the natural one for the functional.
PositionReport optimize_position(const ConvexPolygon& poly,
                                 QuotientFunctional functional,
                                 OptimizeSense sense,
                                 const PositionOptions& opts = {});

/// Closed-form chord fraction of the balanced minimizing bisection of the
/// isosceles family, theta in (0, pi/3].
double lambda_m(double theta);

/// Piecewise closed-form isodiametric bisection quotient of the isosceles
/// family: 2 cos^2(theta) sin(theta) on (0, pi/3], sin(theta)/2 on
/// [pi/3, pi); continuous at pi/3.
double isosceles_quotient(double theta);

/// Area of the normalized flat-sided profile body as a function of the
/// half-separation b in [0, 1/2]; the b = 1/2 endpoint is the symmetric
/// lens value (4 pi - 3 sqrt(3)) / 6.
double area_profile(double b);

/// Golden-section maximum of area_profile on [0, 1/2]: (b*, A(b*)).
std::pair<double, double> argmax_area_profile();

}  // namespace fairsect
