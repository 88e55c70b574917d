#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairsect/bisect.hpp"

namespace fairsect {

enum class DirectionSource { Diametrical, Bisector };

/// A finite set of unit directions identified with their negatives, stored
/// as angles in [0, pi) with cyclic deduplication.
struct DirectionSet {
    std::vector<double> angles;  // sorted, in [0, pi)
    DirectionSource source = DirectionSource::Diametrical;
    double tol = kAngleTol;

    bool empty() const { return angles.empty(); }
    std::size_t size() const { return angles.size(); }
    Vec2 direction(std::size_t i) const {
        return {std::cos(angles[i]), std::sin(angles[i])};
    }

    static DirectionSet from_vectors(const std::vector<Vec2>& dirs,
                                     DirectionSource source,
                                     double dedup_tol = kAngleTol);
};

/// Directions of all vertex pairs attaining the diameter up to a relative
/// tolerance (d >= (1 - tol) * D).
DirectionSet diametrical_directions(const ConvexPolygon& poly, double tol = 1e-9);
DirectionSet piece_diametrical_directions(const ClipPiece& piece, double tol);

enum class CoverageMode { AtLeast, AtMost };

/// Exact angular-arc check of the half-turn coverage conditions:
/// AtLeast: every u has some v with |u.v| >= 1/sqrt(2);
/// AtMost:  every u has some v with |u.v| <= 1/sqrt(2).
/// Returns a violating u as witness when the check fails.
struct CoverageCheck {
    bool holds = false;
    std::optional<Vec2> witness;
};
CoverageCheck coverage_check(const DirectionSet& dirs, CoverageMode mode,
                             double tol = kAngleTol);

/// Searches direction triples (repetition allowed) for nonnegative weights
/// with sum lambda_i u_i u_i^T = I2.
struct DecompositionCheck {
    bool holds = false;
    std::array<Vec2, 3> directions{};
    std::array<double, 3> weights{};
    double residual = 0.0;
};
DecompositionCheck decomposition_check(const DirectionSet& dirs);

struct BisectorOptions {
    BisectOptions search;
    double tol_near = kNearRel;   // relative band around D_B kept as bisectors
    int direction_sweep = 64;     // balanced-chord candidates per half turn
    double dedup_tol = 1e-4;      // angular dedup for searched directions
};

/// Equal-diameter minimizing chords and their directions: near-optima of
/// the diameter search, polygon edges, and a balanced direction sweep, all
/// filtered to chords whose balanced pieces both evaluate within tol_near
/// of D_B.
struct BisectorChord {
    double angle;
    Chord chord;
    std::pair<double, double> piece_values;
};
std::vector<BisectorChord> bisector_chords(const ConvexPolygon& poly,
                                           const BisectorOptions& opts = {});
DirectionSet bisector_directions(const ConvexPolygon& poly,
                                 const BisectorOptions& opts = {});

/// Necessary-condition audit at every sampled bisector: piece diametrical
/// sets must cover the half turn in both senses, and some pair of attained
/// directions must satisfy |u1.u2| <= 1/2.
struct BehrendBisectingReport {
    struct PerBisector {
        double angle = 0.0;
        Chord chord;
        bool coverage_at_least = false;
        bool coverage_at_most = false;
        bool pair_condition = false;
        double best_pair_dot = 1.0;
        std::optional<Vec2> witness_at_least;
        std::optional<Vec2> witness_at_most;
        bool pass() const {
            return coverage_at_least && coverage_at_most && pair_condition;
        }
    };

    bool no_bisector = false;
    std::vector<PerBisector> bisectors;

    bool any_pass() const;
    bool all_pass() const;
};

struct BehrendCheckOptions {
    BisectorOptions bisectors;
    double attain_tol = 1e-6;   // relative diameter attainment on pieces
    double pair_slack = 1e-9;
    double coverage_tol = 1e-6; // angular slack absorbing chord search noise
};

BehrendBisectingReport behrend_bisecting_check(const ConvexPolygon& poly,
                                               const BehrendCheckOptions& opts = {});

}  // namespace fairsect
