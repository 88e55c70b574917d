#include "fairsect/directions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fairsect/errors.hpp"

namespace fairsect {

namespace {

const double kPi = std::acos(-1.0);

double wrap_pi(double a) {
    a = std::fmod(a, kPi);
    if (a < 0.0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

}  // namespace

DirectionSet DirectionSet::from_vectors(const std::vector<Vec2>& dirs,
                                        DirectionSource source, double dedup_tol) {
    std::vector<double> angles;
    angles.reserve(dirs.size());
    for (const Vec2& d : dirs) {
        if (d.norm2() <= 0.0) continue;
        angles.push_back(direction_angle(d));
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> out;
    for (double a : angles) {
        if (out.empty() || a - out.back() > dedup_tol) out.push_back(a);
    }
    // Wrap: 0 and pi are the same direction.
    while (out.size() > 1 && out.front() + kPi - out.back() <= dedup_tol) out.pop_back();

    DirectionSet ds;
    ds.angles = std::move(out);
    ds.source = source;
    ds.tol = dedup_tol;
    return ds;
}

namespace {

DirectionSet diametrical_of_ring(std::span<const Vec2> pts, double tol,
                                 double dedup_tol) {
    const double d = ring_diameter(pts).value;
    const double thresh = (1.0 - tol) * d;
    const double thresh2 = thresh * thresh;
    std::vector<Vec2> dirs;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist2(pts[i], pts[j]) >= thresh2) dirs.push_back(pts[j] - pts[i]);
        }
    }
    return DirectionSet::from_vectors(dirs, DirectionSource::Diametrical, dedup_tol);
}

}  // namespace

DirectionSet diametrical_directions(const ConvexPolygon& poly, double tol) {
    return diametrical_of_ring(poly.vertices(), tol, kAngleTol);
}

DirectionSet piece_diametrical_directions(const ClipPiece& piece, double tol) {
    if (piece.degenerate) {
        return DirectionSet::from_vectors({piece.seg_b - piece.seg_a},
                                          DirectionSource::Diametrical, kAngleTol);
    }
    return diametrical_of_ring(piece.poly.vertices(), tol, kAngleTol);
}

CoverageCheck coverage_check(const DirectionSet& dirs, CoverageMode mode, double tol) {
    if (dirs.empty()) throw EmptySet("coverage_check: empty direction set");
    const auto& a = dirs.angles;
    const std::size_t n = a.size();

    // Largest cyclic gap between consecutive stored angles (period pi).
    double max_gap = 0.0;
    std::size_t gap_at = 0;  // gap runs from a[gap_at] to the next angle
    for (std::size_t i = 0; i < n; ++i) {
        const double g = i + 1 < n ? a[i + 1] - a[i] : a[0] + kPi - a[n - 1];
        if (g > max_gap) {
            max_gap = g;
            gap_at = i;
        }
    }
    if (n == 1) {
        max_gap = kPi;
        gap_at = 0;
    }

    CoverageCheck res;
    res.holds = max_gap <= kPi / 2.0 + tol;
    if (!res.holds) {
        double witness_angle;
        if (mode == CoverageMode::AtLeast) {
            // No stored direction within pi/4 of the gap midpoint.
            witness_angle = wrap_pi(a[gap_at] + max_gap / 2.0);
        } else {
            // All stored directions within pi/4 of the covering-arc midpoint.
            const double arc_start = gap_at + 1 < n ? a[gap_at + 1] : a[0];
            witness_angle = wrap_pi(arc_start + (kPi - max_gap) / 2.0);
        }
        res.witness = Vec2{std::cos(witness_angle), std::sin(witness_angle)};
    }
    return res;
}

namespace {

// Least-squares solve of sum_i l_i (u_i u_i^T) = I2 over the chosen
// directions; rows are the three independent entries of the symmetric
// system. Returns the max-norm residual, or infinity when the normal
// equations are rank deficient.
double solve_decomposition(const std::vector<Vec2>& u, std::vector<double>& lam) {
    const std::size_t m = u.size();
    std::vector<std::array<double, 3>> col(m);
    for (std::size_t c = 0; c < m; ++c)
        col[c] = {u[c].x * u[c].x, u[c].y * u[c].y, u[c].x * u[c].y};
    const std::array<double, 3> rhs{1.0, 1.0, 0.0};

    // Normal equations G l = h with G = A^T A.
    double G[3][3] = {};
    double h[3] = {};
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            for (int r = 0; r < 3; ++r) G[a][b] += col[a][r] * col[b][r];
        for (int r = 0; r < 3; ++r) h[a] += col[a][r] * rhs[r];
    }
    // Gauss-Jordan with partial pivoting on the m x m block.
    std::array<int, 3> perm{0, 1, 2};
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::abs(G[r][c]) > std::abs(G[piv][c])) piv = r;
        if (std::abs(G[piv][c]) < 1e-13) return std::numeric_limits<double>::infinity();
        std::swap(G[c], G[piv]);
        std::swap(h[c], h[piv]);
        std::swap(perm[c], perm[piv]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c) continue;
            const double f = G[r][c] / G[c][c];
            for (std::size_t k = 0; k < m; ++k) G[r][k] -= f * G[c][k];
            h[r] -= f * h[c];
        }
    }
    lam.assign(m, 0.0);
    for (std::size_t c = 0; c < m; ++c) lam[c] = h[c] / G[c][c];

    double resid = 0.0;
    for (int r = 0; r < 3; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < m; ++c) s += lam[c] * col[c][r];
        resid = std::max(resid, std::abs(s - rhs[r]));
    }
    return resid;
}

}  // namespace

DecompositionCheck decomposition_check(const DirectionSet& dirs) {
    if (dirs.empty()) throw EmptySet("decomposition_check: empty direction set");
    const std::size_t n = dirs.size();

    DecompositionCheck best;
    best.residual = std::numeric_limits<double>::infinity();

    // Distinct index subsets of size up to 3; a smaller subset stands for a
    // triple with repeated directions and zero extra weight.
    std::vector<std::array<std::size_t, 3>> subsets;
    for (std::size_t i = 0; i < n; ++i) {
        subsets.push_back({i, i, i});
        for (std::size_t j = i + 1; j < n; ++j) {
            subsets.push_back({i, j, j});
            for (std::size_t k = j + 1; k < n; ++k) subsets.push_back({i, j, k});
        }
    }

    for (const auto& idx : subsets) {
        std::vector<Vec2> u;
        u.push_back(dirs.direction(idx[0]));
        if (idx[1] != idx[0]) u.push_back(dirs.direction(idx[1]));
        if (idx[2] != idx[1]) u.push_back(dirs.direction(idx[2]));

        std::vector<double> lam;
        const double resid = solve_decomposition(u, lam);
        if (!std::isfinite(resid)) continue;

        double lam_min = 0.0;
        for (double l : lam) lam_min = std::min(lam_min, l);

        std::array<Vec2, 3> u3{u[0], u[u.size() > 1 ? 1 : 0], u.back()};
        std::array<double, 3> l3{};
        for (std::size_t c = 0; c < u.size(); ++c) l3[c] = std::max(lam[c], 0.0);

        if (resid < 1e-9 && lam_min >= -1e-12) {
            DecompositionCheck res;
            res.holds = true;
            res.directions = u3;
            res.weights = l3;
            res.residual = resid;
            return res;
        }
        if (resid < best.residual) {
            best.residual = resid;
            best.directions = u3;
            best.weights = l3;
        }
    }
    return best;  // holds == false
}

std::vector<BisectorChord> bisector_chords(const ConvexPolygon& poly,
                                           const BisectorOptions& opts) {
    const BisectResult base = min_bisect_diameter(poly, opts.search);
    const double db = base.value;
    const double band = opts.tol_near * db;

    std::vector<Chord> candidates = base.near_optima;
    candidates.push_back(base.chord);

    // Edge chords cover minimizing bisections with a degenerate piece.
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        candidates.push_back(make_chord(poly, poly.parameter_at(i, 0.0),
                                        poly.parameter_at(i, 1.0)));
    }

    // Balanced center chords over a direction sweep pick up equal-diameter
    // minimizers that grid refinement has no reason to visit on flat
    // objectives.
    const Vec2 c = poly.centroid();
    for (int k = 0; k < opts.direction_sweep; ++k) {
        const double ang = k * std::acos(-1.0) / opts.direction_sweep;
        const Vec2 dir{std::cos(ang), std::sin(ang)};
        const Vec2 normal = dir.perp();
        if (auto ch = chord_at_line(poly, normal, c.dot(normal))) candidates.push_back(*ch);
    }

    detail::BisectEvaluator ev(poly);
    std::vector<BisectorChord> kept;
    for (const Chord& cand : candidates) {
        BalanceResult bal = balance_chord(poly, cand, PieceFunctional::Diameter);
        if (!bal.balanced) continue;
        const auto vals = ev.piece_diameters(bal.chord.s, bal.chord.t);
        if (std::abs(vals.first - db) > band || std::abs(vals.second - db) > band)
            continue;
        const double ang = direction_angle(bal.chord.direction);
        bool dup = false;
        for (const auto& b : kept) {
            double d = std::abs(b.angle - ang);
            d = std::min(d, std::acos(-1.0) - d);
            if (d <= opts.dedup_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back({ang, bal.chord, vals});
    }
    std::sort(kept.begin(), kept.end(),
              [](const BisectorChord& a, const BisectorChord& b) { return a.angle < b.angle; });
    return kept;
}

DirectionSet bisector_directions(const ConvexPolygon& poly, const BisectorOptions& opts) {
    const auto chords = bisector_chords(poly, opts);
    DirectionSet ds;
    ds.source = DirectionSource::Bisector;
    ds.tol = opts.dedup_tol;
    for (const auto& b : chords) ds.angles.push_back(b.angle);
    return ds;
}

bool BehrendBisectingReport::any_pass() const {
    for (const auto& b : bisectors)
        if (b.pass()) return true;
    return false;
}

bool BehrendBisectingReport::all_pass() const {
    if (bisectors.empty()) return false;
    for (const auto& b : bisectors)
        if (!b.pass()) return false;
    return true;
}

BehrendBisectingReport behrend_bisecting_check(const ConvexPolygon& poly,
                                               const BehrendCheckOptions& opts) {
    BehrendBisectingReport report;
    const auto chords = bisector_chords(poly, opts.bisectors);
    if (chords.empty()) {
        report.no_bisector = true;
        return report;
    }

    for (const auto& bc : chords) {
        BehrendBisectingReport::PerBisector per;
        per.angle = bc.angle;
        per.chord = bc.chord;

        const Bisection b = clip_by_chord(poly, bc.chord);
        const DirectionSet v1 = piece_diametrical_directions(b.piece1, opts.attain_tol);
        const DirectionSet v2 = piece_diametrical_directions(b.piece2, opts.attain_tol);

        std::vector<Vec2> merged;
        for (std::size_t i = 0; i < v1.size(); ++i) merged.push_back(v1.direction(i));
        for (std::size_t i = 0; i < v2.size(); ++i) merged.push_back(v2.direction(i));
        const DirectionSet both =
            DirectionSet::from_vectors(merged, DirectionSource::Diametrical, kAngleTol);
        if (both.empty()) continue;

        const CoverageCheck at_least =
            coverage_check(both, CoverageMode::AtLeast, opts.coverage_tol);
        const CoverageCheck at_most =
            coverage_check(both, CoverageMode::AtMost, opts.coverage_tol);
        per.coverage_at_least = at_least.holds;
        per.coverage_at_most = at_most.holds;
        per.witness_at_least = at_least.witness;
        per.witness_at_most = at_most.witness;

        per.best_pair_dot = 1.0;
        for (std::size_t i = 0; i < both.size(); ++i) {
            for (std::size_t j = i + 1; j < both.size(); ++j) {
                const double d = std::abs(both.direction(i).dot(both.direction(j)));
                per.best_pair_dot = std::min(per.best_pair_dot, d);
            }
        }
        per.pair_condition = both.size() >= 2 && per.best_pair_dot <= 0.5 + opts.pair_slack;

        report.bisectors.push_back(per);
    }
    return report;
}

}  // namespace fairsect
