#include "fairsect/bisect.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "fairsect/errors.hpp"
#include "fairsect/parallel.hpp"

namespace fairsect {

namespace detail {

BisectEvaluator::BisectEvaluator(const ConvexPolygon& poly) : poly_(poly) {
    // Parameter separation below which a chord is not worth evaluating.
    min_sep_ = std::max(1e-9, 4.0 * kEpsGeo);
    buf1_.reserve(poly.size() + 2);
    buf2_.reserve(poly.size() + 2);
}

void BisectEvaluator::gather(double s, double t) {
    const auto& v = poly_.vertices();
    const std::size_t n = v.size();
    const double tol = kEpsGeo * std::max(1.0, poly_.scale());

    const auto [e1, p] = poly_.boundary_edge_point(s);
    const auto [e2, q] = poly_.boundary_edge_point(t);

    auto fill = [&](std::vector<Vec2>& buf, std::size_t from, std::size_t to,
                    const Vec2& start, const Vec2& stop, double from_param,
                    double to_param) {
        buf.clear();
        buf.push_back(start);
        std::size_t cnt = (to + n - from) % n;
        if (from == to && to_param < from_param) cnt = n;
        for (std::size_t k = 1; k <= cnt; ++k) {
            const Vec2& vert = v[(from + k) % n];
            if (dist2(buf.back(), vert) > tol * tol) buf.push_back(vert);
        }
        if (dist2(buf.back(), stop) > tol * tol &&
            dist2(buf.front(), stop) > tol * tol)
            buf.push_back(stop);
    };
    const double sp = s - std::floor(s), tp = t - std::floor(t);
    fill(buf1_, e1, e2, p, q, sp, tp);
    fill(buf2_, e2, e1, q, p, tp, sp);
}

std::pair<double, double> BisectEvaluator::piece_diameters(double s, double t) {
    gather(s, t);
    auto measure = [](const std::vector<Vec2>& buf) {
        if (buf.size() < 2) return 0.0;
        if (buf.size() == 2) return dist(buf[0], buf[1]);
        return ring_diameter(buf).value;
    };
    return {measure(buf1_), measure(buf2_)};
}

double BisectEvaluator::max_piece_diameter(double s, double t) {
    const auto [d1, d2] = piece_diameters(s, t);
    return std::max(d1, d2);
}

std::pair<double, double> BisectEvaluator::piece_widths(double s, double t) {
    gather(s, t);
    auto measure = [](const std::vector<Vec2>& buf) {
        if (buf.size() < 3) return 0.0;
        return ring_width(buf).value;
    };
    return {measure(buf1_), measure(buf2_)};
}

}  // namespace detail

namespace {

double wrap01(double x) {
    x -= std::floor(x);
    if (x >= 1.0) x -= 1.0;
    return x;
}

double circ_sep(double s, double t) {
    const double d = std::abs(wrap01(s) - wrap01(t));
    return std::min(d, 1.0 - d);
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective over the parameter torus; invalid (near-coincident) chords
// evaluate to +inf so searches simply avoid them.
struct DiamObjective {
    detail::BisectEvaluator& ev;
    double operator()(double s, double t) {
        if (circ_sep(s, t) < ev.min_separation()) return kInf;
        return ev.max_piece_diameter(wrap01(s), wrap01(t));
    }
};

struct CompassOutcome {
    double s, t, value;
};

template <typename Obj>
CompassOutcome compass_refine(Obj& f, double s, double t, double value,
                              double step, double step_tol) {
    static constexpr double kDirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                           {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    while (step >= step_tol) {
        double best = value;
        double bs = s, bt = t;
        for (const auto& d : kDirs) {
            const double cs = wrap01(s + d[0] * step);
            const double ct = wrap01(t + d[1] * step);
            const double cv = f(cs, ct);
            if (cv < best) {
                best = cv;
                bs = cs;
                bt = ct;
            }
        }
        if (best < value) {
            value = best;
            s = bs;
            t = bt;
        } else {
            step *= 0.5;
        }
    }
    return {s, t, value};
}

template <typename Obj>
CompassOutcome compass_refine_1d(Obj& f, double x, double value, double step,
                                 double step_tol) {
    while (step >= step_tol) {
        const double lo = f(x - step);
        const double hi = f(x + step);
        if (lo < value && lo <= hi) {
            value = lo;
            x -= step;
        } else if (hi < value) {
            value = hi;
            x += step;
        } else {
            step *= 0.5;
        }
    }
    return {x, 0.0, value};
}

void normalize_pair(double& s, double& t) {
    s = wrap01(s);
    t = wrap01(t);
    if (t < s) std::swap(s, t);
}

}  // namespace

std::pair<double, std::pair<double, double>> evaluate_bisection(
    const ConvexPolygon& poly, double s, double t, PieceFunctional functional) {
    const Chord chord = make_chord(poly, s, t);
    const Bisection b = clip_by_chord(poly, chord);
    double v1, v2;
    if (functional == PieceFunctional::Diameter) {
        v1 = b.piece1.diameter_value();
        v2 = b.piece2.diameter_value();
    } else {
        v1 = b.piece1.width_value();
        v2 = b.piece2.width_value();
    }
    return {std::max(v1, v2), {v1, v2}};
}

BisectResult min_bisect_diameter(const ConvexPolygon& poly, const BisectOptions& opts) {
    const int m = std::max(8, opts.grid);
    const double d_poly = diameter(poly).value;

    // Coarse grid over unordered parameter pairs, evaluated row-parallel
    // and reduced in index order.
    const std::size_t cells = static_cast<std::size_t>(m) * (m - 1) / 2;
    std::vector<double> values(cells);
    std::vector<std::pair<int, int>> pairs(cells);
    std::vector<std::size_t> row_offset(m, 0);
    {
        std::size_t idx = 0;
        for (int i = 0; i < m; ++i) {
            row_offset[i] = idx;
            for (int j = i + 1; j < m; ++j) pairs[idx++] = {i, j};
        }
    }
    parallel_for(static_cast<std::size_t>(m), opts.threads, [&](std::size_t i) {
        detail::BisectEvaluator row_ev(poly);
        DiamObjective f{row_ev};
        const double s = i / double(m);
        for (int j = static_cast<int>(i) + 1; j < m; ++j)
            values[row_offset[i] + j - i - 1] = f(s, j / double(m));
    });

    // Top-k cells by (value, lexicographic pair).
    std::vector<std::size_t> order(cells);
    for (std::size_t i = 0; i < cells; ++i) order[i] = i;
    const std::size_t k = std::min<std::size_t>(std::max(1, opts.starts), cells);
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (values[a] != values[b]) return values[a] < values[b];
                          return pairs[a] < pairs[b];
                      });

    detail::BisectEvaluator ev(poly);
    DiamObjective f{ev};

    struct Refined {
        double s, t, value;
    };
    std::vector<Refined> refined;
    refined.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        const auto [i, j] = pairs[order[r]];
        const double s0 = i / double(m), t0 = j / double(m);
        const double v0 = f(s0, t0);
        if (v0 == kInf) continue;
        const auto out = compass_refine(f, s0, t0, v0, 1.0 / m, opts.refine_tol);
        refined.push_back({out.s, out.t, out.value});
    }
    if (refined.empty()) {
        // Fall back to a plain edge chord; only reachable for tiny grids.
        const auto out = compass_refine(f, 0.0, 0.5, f(0.0, 0.5), 0.25, opts.refine_tol);
        refined.push_back({out.s, out.t, out.value});
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < refined.size(); ++i) {
        if (refined[i].value < refined[best].value) best = i;
    }

    // Near-optimum set before the deep polish, deduplicated on the torus.
    std::vector<Chord> near;
    const double cutoff = refined[best].value * (1.0 + opts.near_rel);
    for (const auto& r : refined) {
        if (r.value > cutoff) continue;
        double s = r.s, t = r.t;
        normalize_pair(s, t);
        bool dup = false;
        for (const Chord& c : near) {
            if (circ_sep(s, c.s) < 1e-5 && circ_sep(t, c.t) < 1e-5) {
                dup = true;
                break;
            }
        }
        if (!dup) near.push_back(make_chord(poly, s, t));
    }

    // Deep polish of the winner stabilizes the reported value across rigid
    // motions of the input.
    auto polished = compass_refine(f, refined[best].s, refined[best].t,
                                   refined[best].value, opts.refine_tol,
                                   opts.polish_tol);

    BisectResult result;
    result.value = polished.value;
    result.chord = make_chord(poly, polished.s, polished.t);
    result.piece_values = ev.piece_diameters(polished.s, polished.t);
    result.value = std::max(result.piece_values.first, result.piece_values.second);
    result.balanced = std::abs(result.piece_values.first - result.piece_values.second) <=
                      kBalanceRel * d_poly;
    result.near_optima = std::move(near);
    return result;
}

BisectResult min_bisect_diameter_oracle(const ConvexPolygon& poly, int grid,
                                        int threads) {
    const int m = std::max(8, grid);

    struct RowMin {
        double value = kInf;
        int j = -1;
    };
    std::vector<RowMin> rows(m);
    parallel_for(static_cast<std::size_t>(m), threads, [&](std::size_t i) {
        detail::BisectEvaluator row_ev(poly);
        DiamObjective f{row_ev};
        RowMin best;
        const double s = i / double(m);
        for (int j = static_cast<int>(i) + 1; j < m; ++j) {
            const double v = f(s, j / double(m));
            if (v < best.value) {
                best.value = v;
                best.j = j;
            }
        }
        rows[i] = best;
    });

    int bi = 0, bj = 1;
    double best = kInf;
    for (int i = 0; i < m; ++i) {
        if (rows[i].j >= 0 && rows[i].value < best) {
            best = rows[i].value;
            bi = i;
            bj = rows[i].j;
        }
    }

    detail::BisectEvaluator ev(poly);
    const double s = bi / double(m), t = bj / double(m);
    BisectResult result;
    result.chord = make_chord(poly, s, t);
    result.piece_values = ev.piece_diameters(s, t);
    result.value = std::max(result.piece_values.first, result.piece_values.second);
    result.balanced = std::abs(result.piece_values.first - result.piece_values.second) <=
                      kBalanceRel * diameter(poly).value;
    return result;
}

BalanceResult balance_chord(const ConvexPolygon& poly, const Chord& chord,
                            PieceFunctional functional) {
    const Vec2 normal = chord.direction.perp();
    const double tol_bal = kBalanceRel * diameter(poly).value;

    // Piece values on the two sides of the line at a given offset; lower =
    // side toward -normal. Returns false outside the supporting range.
    auto values_at = [&](double o, double& lower, double& upper, Chord& out) {
        const auto ch = chord_at_line(poly, normal, o);
        if (!ch) return false;
        Chord c = *ch;
        if (c.direction.dot(chord.direction) < 0.0) {
            std::swap(c.s, c.t);
            std::swap(c.p, c.q);
            c.direction = -c.direction;
        }
        const Bisection b = clip_by_chord(poly, c);
        double v1, v2;
        if (functional == PieceFunctional::Diameter) {
            v1 = b.piece1.diameter_value();
            v2 = b.piece2.diameter_value();
        } else {
            v1 = b.piece1.width_value();
            v2 = b.piece2.width_value();
        }
        // Decide which piece sits on the -normal side by a strictly
        // interior reference point.
        Vec2 ref;
        bool ref_is_piece1;
        if (!b.piece1.degenerate) {
            ref = b.piece1.poly.centroid();
            ref_is_piece1 = true;
        } else if (!b.piece2.degenerate) {
            ref = b.piece2.poly.centroid();
            ref_is_piece1 = false;
        } else {
            return false;
        }
        const bool piece1_low = ref_is_piece1 ? ref.dot(normal) < o : ref.dot(normal) > o;
        if (!piece1_low) std::swap(v1, v2);
        lower = v1;
        upper = v2;
        out = c;
        return true;
    };

    auto mismatch_at = [&](double o, double& h, Chord& out) {
        double lo, up;
        if (!values_at(o, lo, up, out)) {
            h = kInf;
            return false;
        }
        h = lo - up;
        return true;
    };

    // Already balanced: return the input unchanged.
    {
        const double oc = chord.p.dot(normal);
        double h;
        Chord c;
        if (mismatch_at(oc, h, c) && std::abs(h) <= tol_bal)
            return {chord, true, std::abs(h)};
    }

    double omin = kInf, omax = -kInf;
    for (const Vec2& v : poly.vertices()) {
        const double o = v.dot(normal);
        omin = std::min(omin, o);
        omax = std::max(omax, o);
    }
    const double span = omax - omin;
    const double inset = span * 1e-9;

    double lo = omin + inset, hi = omax - inset;
    double hlo, hhi;
    Chord clo, chi;
    const bool ok_lo = mismatch_at(lo, hlo, clo);
    const bool ok_hi = mismatch_at(hi, hhi, chi);

    auto closest_endpoint = [&]() -> BalanceResult {
        if (ok_lo && (!ok_hi || std::abs(hlo) <= std::abs(hhi)))
            return {clo, false, std::abs(hlo)};
        if (ok_hi) return {chi, false, std::abs(hhi)};
        return {chord, false, kInf};
    };

    if (!ok_lo || !ok_hi) return closest_endpoint();

    if (hlo == 0.0) return {clo, true, 0.0};
    if (hhi == 0.0) return {chi, true, 0.0};
    if ((hlo > 0.0) == (hhi > 0.0)) {
        // Same sign over the full sweep: scan for an interior bracket
        // before giving up (the mismatch need not be monotone end to end).
        const int scan = 128;
        double prev_o = lo, prev_h = hlo;
        double best_h = std::min(std::abs(hlo), std::abs(hhi));
        double found_lo = 0.0, found_hi = 0.0;
        bool found = false;
        for (int i = 1; i <= scan && !found; ++i) {
            const double o = lo + (hi - lo) * i / scan;
            double h;
            Chord c;
            if (!mismatch_at(o, h, c)) continue;
            best_h = std::min(best_h, std::abs(h));
            if ((h > 0.0) != (prev_h > 0.0)) {
                found_lo = prev_o;
                found_hi = o;
                found = true;
            }
            prev_o = o;
            prev_h = h;
        }
        if (!found) return closest_endpoint();
        lo = found_lo;
        hi = found_hi;
        mismatch_at(lo, hlo, clo);
    }

    // Bisection on the offset.
    Chord out = clo;
    for (int iter = 0; iter < 64; ++iter) {
        const double mid = (lo + hi) / 2.0;
        double h;
        Chord c;
        if (!mismatch_at(mid, h, c)) break;
        if (std::abs(h) <= tol_bal) return {c, true, std::abs(h)};
        if ((h > 0.0) == (hlo > 0.0)) {
            lo = mid;
            hlo = h;
            clo = c;
        } else {
            hi = mid;
        }
        out = c;
    }
    double h_final;
    Chord c_final = out;
    if (mismatch_at((lo + hi) / 2.0, h_final, c_final))
        return {c_final, std::abs(h_final) <= tol_bal, std::abs(h_final)};
    return {out, false, kInf};
}

BisectResult min_bisect_width(const ConvexPolygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = poly.size();
    const WidthResult w = ring_width(v);

    const Vec2 e = v[(w.edge + 1) % n] - v[w.edge];
    const Vec2 inner = e.perp().normalized();
    const double o_edge = v[w.edge].dot(inner);
    const double o_far = v[w.vertex].dot(inner);
    const double o_mid = (o_edge + o_far) / 2.0;

    auto chord = chord_at_line(poly, inner, o_mid);
    if (!chord) throw GeometryError("min_bisect_width: mid chord missing");

    detail::BisectEvaluator ev(poly);
    BisectResult result;
    result.value = w.value / 2.0;
    result.chord = *chord;
    result.piece_values = ev.piece_widths(chord->s, chord->t);
    result.balanced =
        std::abs(result.piece_values.first - result.piece_values.second) <=
        kBalanceRel * diameter(poly).value;
    return result;
}

BisectResult symmetric_min_bisect(const ConvexPolygon& poly, const BisectOptions& opts) {
    const auto center = is_centrally_symmetric(poly, 1e-9);
    if (!center) throw NotSymmetric("symmetric_min_bisect: no center found");

    detail::BisectEvaluator ev(poly);
    DiamObjective f2{ev};
    auto f = [&](double tau) { return f2(wrap01(tau), wrap01(tau + 0.5)); };

    const int m = 512;
    double best_tau = 0.0, best_val = kInf;
    for (int i = 0; i < m; ++i) {
        const double tau = i / double(2 * m);  // tau in [0, 1/2)
        const double val = f(tau);
        if (val < best_val) {
            best_val = val;
            best_tau = tau;
        }
    }
    auto out = compass_refine_1d(f, best_tau, best_val, 1.0 / (2 * m), opts.refine_tol);
    out = compass_refine_1d(f, out.s, out.value, opts.refine_tol, opts.polish_tol);

    const double s = wrap01(out.s), t = wrap01(out.s + 0.5);
    BisectResult result;
    result.chord = make_chord(poly, s, t);
    result.piece_values = ev.piece_diameters(s, t);
    result.value = std::max(result.piece_values.first, result.piece_values.second);
    result.balanced = std::abs(result.piece_values.first - result.piece_values.second) <=
                      kBalanceRel * diameter(poly).value;
    return result;
}

BangCheck bang_check(const ConvexPolygon& poly, const Chord& chord) {
    const Bisection b = clip_by_chord(poly, chord);
    return {b.piece1.width_value(), b.piece2.width_value(), width(poly).value};
}

}  // namespace fairsect
