#pragma once

#include <vector>

#include "fairsect/chord.hpp"

namespace fairsect {

enum class PieceFunctional { Diameter, Width };

struct BisectOptions {
    int grid = 64;             // coarse grid per parameter axis
    int starts = 8;            // refined multistart count
    double refine_tol = 1e-7;  // compass step at which refinement stops
    double polish_tol = 1e-12; // extra polish of the best chord
    double near_rel = kNearRel;
    int threads = 0;           // 0: hardware / FAIRSECT_THREADS cap
};

struct BisectResult {
    double value = 0.0;                 // minimized max-piece functional
    Chord chord;
    std::pair<double, double> piece_values{0.0, 0.0};
    bool balanced = false;              // |v1 - v2| <= kBalanceRel * D(P)
    std::vector<Chord> near_optima;     // within (1 + near_rel) * value
};

/// Max piece functional of the (s, t) chord bisection, plus both piece
/// values. Throws InvalidChord when the endpoints coincide.
std::pair<double, std::pair<double, double>> evaluate_bisection(
    const ConvexPolygon& poly, double s, double t, PieceFunctional functional);

/// Derivative-free search for the minimizing diameter bisection: coarse
/// grid over unordered parameter pairs, compass refinement of the best
/// cells, then a deep polish of the winner.
BisectResult min_bisect_diameter(const ConvexPolygon& poly,
                                 const BisectOptions& opts = {});

/// Exhaustive lattice minimum over a grid x grid parameter torus;
/// deterministic, ties broken by lexicographic (s, t).
BisectResult min_bisect_diameter_oracle(const ConvexPolygon& poly, int grid,
                                        int threads = 0);

struct BalanceResult {
    Chord chord;
    bool balanced = false;   // false: no sign change found (NoBalance)
    double mismatch = 0.0;   // piece value difference at the returned chord
};

/// Translates the chord along its normal until the two piece functional
/// values agree within kBalanceRel * diameter(poly). If no sign change
/// exists over the full supporting range, returns the endpoint closest to
/// balance with balanced = false.
BalanceResult balance_chord(const ConvexPolygon& poly, const Chord& chord,
                            PieceFunctional functional);

/// Constructive minimum width bisection: value is exactly width/2, the
/// chord is the full chord on the mid parallel line of the width strip.
BisectResult min_bisect_width(const ConvexPolygon& poly);

/// One-parameter search over center chords [p, -p] of a centrally
/// symmetric body. Throws NotSymmetric when no center is found.
BisectResult symmetric_min_bisect(const ConvexPolygon& poly,
                                  const BisectOptions& opts = {});

/// (w(K1), w(K2), w(K)) for the chord bisection; the plank inequality
/// guarantees w(K1) + w(K2) >= w(K).
struct BangCheck {
    double w1, w2, w;
};
BangCheck bang_check(const ConvexPolygon& poly, const Chord& chord);

namespace detail {

/// Allocation-light evaluator used by the searches: piece vertices are
/// gathered into reusable buffers and measured in place.
class BisectEvaluator {
public:
    explicit BisectEvaluator(const ConvexPolygon& poly);

    double max_piece_diameter(double s, double t);
    std::pair<double, double> piece_diameters(double s, double t);
    std::pair<double, double> piece_widths(double s, double t);

    const ConvexPolygon& polygon() const { return poly_; }
    double min_separation() const { return min_sep_; }

private:
    void gather(double s, double t);

    const ConvexPolygon& poly_;
    double min_sep_;  // parameter-space separation below which chords are invalid
    std::vector<Vec2> buf1_, buf2_;
};

}  // namespace detail

}  // namespace fairsect
