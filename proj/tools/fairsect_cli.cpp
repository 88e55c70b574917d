#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "fairsect/directions.hpp"
#include "fairsect/errors.hpp"
#include "fairsect/json_io.hpp"
#include "fairsect/position.hpp"
#include "fairsect/svg.hpp"
#include "fairsect/version.hpp"

namespace {

using namespace fairsect;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct InputOptions {
    std::string catalog;
    std::string input_file;
    std::map<std::string, double> params;

    void attach(CLI::App* cmd) {
        cmd->add_option("--catalog", catalog, "catalog shape name (see `catalog list`)");
        cmd->add_option("--input", input_file, "polygon JSON file");
        auto param = [this, cmd](const std::string& flag, const std::string& key) {
            cmd->add_option_function<double>(
                flag, [this, key](double v) { params[key] = v; });
        };
        param("--n", "n");
        param("--a", "a");
        param("--b", "b");
        param("--r", "r");
        param("--k", "k");
        param("--side", "side");
        param("--base", "base");
        param("--angle", "angle");
        param("--theta", "theta");
        param("--seed", "seed");
    }

    ConvexPolygon resolve() const {
        if (!input_file.empty()) return read_polygon_file(input_file);
        if (!catalog.empty()) return make_catalog(catalog, params).polygon;
        throw ParseError("no input: pass --catalog NAME or --input FILE");
    }
};

struct SearchOptions {
    BisectOptions bisect;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid", bisect.grid, "coarse grid per parameter axis");
        cmd->add_option("--starts", bisect.starts, "multistart refinement count");
        cmd->add_option("--tol", bisect.refine_tol, "refinement parameter tolerance");
        cmd->add_option("--threads", bisect.threads, "worker thread cap");
    }
};

void emit(const json& j, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot open output file: " + out_file);
        out << j.dump(2) << "\n";
    }
}

void emit_text(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw ParseError("cannot open output file: " + out_file);
        out << text;
    }
}

// ---------------------------------------------------------------- verify

struct CheckRow {
    std::string shape;
    std::string check;
    bool pass;
    double margin;
    json witness;  // null when absent
};

json rows_to_json(const std::string& suite, const std::vector<CheckRow>& rows) {
    json results = json::array();
    bool all = true;
    for (const auto& r : rows) {
        all = all && r.pass;
        json item{{"shape", r.shape}, {"check", r.check}, {"pass", r.pass},
                  {"margin", r.margin}};
        if (!r.witness.is_null()) item["witness"] = r.witness;
        results.push_back(item);
    }
    return json{{"suite", suite}, {"pass", all}, {"results", results}};
}

void core_suite(const std::string& name, const ConvexPolygon& p,
                const BisectOptions& opts, std::vector<CheckRow>& rows) {
    const double pi = std::acos(-1.0);
    const double a = p.area();
    const double d = diameter(p).value;
    const double w = width(p).value;
    const double db = min_bisect_diameter(p, opts).value;
    const double wb = min_bisect_width(p).value;

    auto row = [&](const std::string& check, bool pass, double margin) {
        rows.push_back({name, check, pass, margin, json()});
    };
    row("width_le_diameter", w <= d + 1e-12, d - w);
    row("isodiametric", a <= pi / 4.0 * d * d + 1e-9, pi / 4.0 * d * d - a);
    row("isominwidth", a >= w * w / std::sqrt(3.0) - 1e-9, a - w * w / std::sqrt(3.0));
    row("db_lower_half_diameter", db >= d / 2.0 - 1e-12, db - d / 2.0);
    row("db_upper_diameter", db <= d + 1e-12, d - db);
    row("wb_identity", wb == w / 2.0, 0.0);
    const double iso_diam_bound = 2.0 * std::atan(0.75);
    row("isodiametric_bisect", a / (db * db) <= iso_diam_bound + 1e-6,
        iso_diam_bound - a / (db * db));
    const double iso_width_bound = 4.0 / std::sqrt(3.0);
    row("isominwidth_bisect", a / (wb * wb) >= iso_width_bound - 1e-9,
        a / (wb * wb) - iso_width_bound);
}

void bang_suite(const std::string& name, const ConvexPolygon& p, std::uint64_t seed,
                int pairs, std::vector<CheckRow>& rows) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    double min_margin = std::numeric_limits<double>::infinity();
    bool all = true;
    json witness;
    for (int i = 0; i < pairs; ++i) {
        const double s = uniform();
        const double t = s + 0.02 + 0.96 * uniform();
        const auto bc = bang_check(p, make_chord(p, s, t));
        const double margin = bc.w1 + bc.w2 - bc.w;
        if (margin < min_margin) min_margin = margin;
        if (margin < -1e-9) {
            all = false;
            witness = json{{"s", s}, {"t", t}, {"w1", bc.w1}, {"w2", bc.w2}, {"w", bc.w}};
        }
    }
    rows.push_back({name, "bang_plank", all, min_margin, witness});

    const auto mid = min_bisect_width(p);
    const auto bc = bang_check(p, mid.chord);
    const double eq = std::abs(bc.w1 + bc.w2 - bc.w);
    rows.push_back({name, "bang_equality_mid_chord", eq <= 1e-12 * std::max(1.0, bc.w),
                    eq, json()});
}

void behrend_suite(const std::string& name, const ConvexPolygon& p,
                   std::vector<CheckRow>& rows) {
    // Position diagnostics: the conditions are necessary only at a
    // Behrend-bisecting position, so their outcome is reported as data and
    // only a failed audit run gates the suite.
    const auto report = behrend_bisecting_check(p);
    if (report.no_bisector) {
        rows.push_back({name, "behrend_audit_completed", false, 0.0, json()});
        return;
    }
    rows.push_back({name, "behrend_audit_completed", true, 1.0, json()});

    json per = json::array();
    for (const auto& b : report.bisectors) {
        per.push_back({{"angle", b.angle},
                       {"coverage_at_least", b.coverage_at_least},
                       {"coverage_at_most", b.coverage_at_most},
                       {"pair_condition", b.pair_condition},
                       {"best_pair_dot", b.best_pair_dot}});
    }
    rows.push_back({name, "behrend_conditions", true,
                    report.any_pass() ? 1.0 : 0.0,
                    json{{"any_pass", report.any_pass()},
                         {"all_pass", report.all_pass()},
                         {"bisectors", per}}});

    const double quotient = p.area() / std::pow(min_bisect_diameter(p).value, 2);
    const double best_triangle = 4.0 / (3.0 * std::sqrt(3.0));
    rows.push_back({name, "behrend_optimality_flag", true, best_triangle - quotient,
                    json{{"quotient", quotient},
                         {"triangle_optimum", best_triangle},
                         {"not_behrend_bisecting_optimal",
                          quotient < best_triangle - 1e-9 || !report.any_pass()}}});
}

int cmd_verify(const InputOptions& in, const SearchOptions& so, const std::string& suite,
               const std::string& corpus, int pairs, const std::string& out_file) {
    if (suite != "core" && suite != "bang" && suite != "behrend" && suite != "all")
        throw ParseError("unknown suite: " + suite);

    std::vector<std::pair<std::string, ConvexPolygon>> bodies;
    if (!corpus.empty()) {
        if (corpus.rfind("random:", 0) != 0)
            throw ParseError("corpus must look like random:100");
        const int count = std::stoi(corpus.substr(7));
        for (int i = 1; i <= count; ++i) {
            bodies.emplace_back("random_" + std::to_string(i),
                                random_polygon(std::uint64_t(i), 16).polygon);
        }
    } else {
        bodies.emplace_back(in.catalog.empty() ? "input" : in.catalog, in.resolve());
    }

    std::vector<CheckRow> rows;
    std::uint64_t seed = 1;
    for (const auto& [name, poly] : bodies) {
        if (suite == "core" || suite == "all") core_suite(name, poly, so.bisect, rows);
        if (suite == "bang" || suite == "all") bang_suite(name, poly, seed, pairs, rows);
        if (suite == "behrend" || suite == "all") behrend_suite(name, poly, rows);
        ++seed;
    }
    const json report = rows_to_json(suite, rows);
    emit(report, out_file);
    return report["pass"].get<bool>() ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- main

int run(int argc, char** argv) {
    CLI::App app{"fairsect: minimizing bisections of planar convex bodies"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* measure_cmd = app.add_subcommand("measure", "area, diameter, width, D_B, w_B");
    InputOptions measure_in;
    SearchOptions measure_so;
    std::string measure_out;
    measure_in.attach(measure_cmd);
    measure_so.attach(measure_cmd);
    measure_cmd->add_option("--out", measure_out, "output file (default stdout)");

    auto* bisect_cmd = app.add_subcommand("bisect", "minimizing bisection search");
    InputOptions bisect_in;
    SearchOptions bisect_so;
    std::string bisect_functional = "diameter";
    std::string bisect_out;
    bool bisect_balance = false;
    bisect_in.attach(bisect_cmd);
    bisect_so.attach(bisect_cmd);
    bisect_cmd->add_option("--functional", bisect_functional, "diameter | width");
    bisect_cmd->add_flag("--balance", bisect_balance, "balance the returned chord");
    bisect_cmd->add_option("--out", bisect_out, "output file");

    auto* pos_cmd = app.add_subcommand("position", "affine position optimization");
    InputOptions pos_in;
    std::string pos_functional = "db2";
    std::string pos_sense;
    std::string pos_out;
    PositionOptions pos_opts;
    pos_in.attach(pos_cmd);
    pos_cmd->add_option("--functional", pos_functional, "d2 | db2 | w2 | wb2");
    pos_cmd->add_option("--sense", pos_sense, "max | min (defaults to the natural one)");
    pos_cmd->add_option("--rmax", pos_opts.r_max, "anisotropy bound of the search family");
    pos_cmd->add_option("--rpoints", pos_opts.r_points, "grid points along r");
    pos_cmd->add_option("--apoints", pos_opts.alpha_points, "grid points along alpha");
    pos_cmd->add_option("--tol", pos_opts.param_tol, "pattern-search tolerance");
    pos_cmd->add_option("--threads", pos_opts.threads, "worker thread cap");
    pos_cmd->add_option("--out", pos_out, "output file");

    auto* verify_cmd = app.add_subcommand("verify", "invariant suites");
    InputOptions verify_in;
    SearchOptions verify_so;
    std::string verify_suite = "core";
    std::string verify_corpus;
    std::string verify_out;
    int verify_pairs = 10;
    verify_in.attach(verify_cmd);
    verify_so.attach(verify_cmd);
    verify_cmd->add_option("--suite", verify_suite, "core | bang | behrend | all");
    verify_cmd->add_option("--corpus", verify_corpus, "random:N seeded corpus");
    verify_cmd->add_option("--pairs", verify_pairs, "bang chord pairs per body");
    verify_cmd->add_option("--out", verify_out, "output file");

    auto* profile_cmd = app.add_subcommand("profile-ab", "area profile CSV over [0, 1/2]");
    int profile_steps = 500;
    std::string profile_out;
    profile_cmd->add_option("--steps", profile_steps, "grid steps");
    profile_cmd->add_option("--out", profile_out, "output file");

    auto* render_cmd = app.add_subcommand("render", "SVG drawing");
    InputOptions render_in;
    SearchOptions render_so;
    std::string render_bisect = "none";
    std::string render_out;
    bool render_pieces = false;
    bool render_width_strip = false;
    render_in.attach(render_cmd);
    render_so.attach(render_cmd);
    render_cmd->add_option("--bisect", render_bisect, "diameter | width | none");
    render_cmd->add_flag("--pieces", render_pieces, "fill the two pieces");
    render_cmd->add_flag("--width-strip", render_width_strip, "draw the width strip");
    render_cmd->add_option("--out", render_out, "output file");

    auto* catalog_cmd = app.add_subcommand("catalog", "catalog access");
    std::string catalog_action = "list";
    InputOptions catalog_in;
    std::string catalog_out;
    catalog_cmd->add_option("action", catalog_action, "list | emit");
    catalog_in.attach(catalog_cmd);
    catalog_cmd->add_option("--out", catalog_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);  // 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    if (measure_cmd->parsed()) {
        const auto poly = measure_in.resolve();
        emit(measure_report_to_json(measure(poly, measure_so.bisect)), measure_out);
        return kExitOk;
    }
    if (bisect_cmd->parsed()) {
        const auto poly = bisect_in.resolve();
        BisectResult res;
        if (bisect_functional == "diameter") {
            res = min_bisect_diameter(poly, bisect_so.bisect);
            if (bisect_balance) {
                const auto bal = balance_chord(poly, res.chord, PieceFunctional::Diameter);
                if (bal.balanced) {
                    const auto v = evaluate_bisection(poly, bal.chord.s, bal.chord.t,
                                                      PieceFunctional::Diameter);
                    res.chord = bal.chord;
                    res.piece_values = v.second;
                    res.value = v.first;
                    res.balanced = true;
                }
            }
        } else if (bisect_functional == "width") {
            res = min_bisect_width(poly);
        } else {
            throw ParseError("unknown functional: " + bisect_functional);
        }
        emit(bisect_result_to_json(res), bisect_out);
        return kExitOk;
    }
    if (pos_cmd->parsed()) {
        const auto poly = pos_in.resolve();
        QuotientFunctional f;
        if (pos_functional == "d2") f = QuotientFunctional::AreaOverDiamSq;
        else if (pos_functional == "db2") f = QuotientFunctional::AreaOverBisectDiamSq;
        else if (pos_functional == "w2") f = QuotientFunctional::AreaOverWidthSq;
        else if (pos_functional == "wb2") f = QuotientFunctional::AreaOverBisectWidthSq;
        else throw ParseError("unknown functional: " + pos_functional);
        OptimizeSense sense = natural_sense(f);
        if (pos_sense == "max") sense = OptimizeSense::Max;
        else if (pos_sense == "min") sense = OptimizeSense::Min;
        else if (!pos_sense.empty()) throw ParseError("unknown sense: " + pos_sense);
        emit(position_report_to_json(optimize_position(poly, f, sense, pos_opts)), pos_out);
        return kExitOk;
    }
    if (verify_cmd->parsed()) {
        return cmd_verify(verify_in, verify_so, verify_suite, verify_corpus, verify_pairs,
                          verify_out);
    }
    if (profile_cmd->parsed()) {
        if (profile_steps < 1) throw ParseError("profile-ab: steps must be positive");
        std::string csv = "b,area\n";
        char line[80];
        for (int i = 0; i <= profile_steps; ++i) {
            const double b = 0.5 * i / profile_steps;
            std::snprintf(line, sizeof(line), "%.10g,%.10g\n", b, area_profile(b));
            csv += line;
        }
        const auto [bstar, astar] = argmax_area_profile();
        std::snprintf(line, sizeof(line), "%.10g,%.10g\n", bstar, astar);
        csv += line;
        emit_text(csv, profile_out);
        return kExitOk;
    }
    if (render_cmd->parsed()) {
        const auto poly = render_in.resolve();
        RenderOptions ro;
        ro.draw_pieces = render_pieces;
        ro.draw_width_strip = render_width_strip;
        if (render_bisect == "diameter") {
            ro.chord = min_bisect_diameter(poly, render_so.bisect).chord;
        } else if (render_bisect == "width") {
            ro.chord = min_bisect_width(poly).chord;
            ro.draw_width_strip = true;
        } else if (render_bisect != "none") {
            throw ParseError("unknown bisect functional: " + render_bisect);
        }
        emit_text(render_svg(poly, ro), render_out);
        return kExitOk;
    }
    if (catalog_cmd->parsed()) {
        if (catalog_action == "list") {
            json out = json::array();
            for (const auto& s : catalog_schemas())
                out.push_back({{"name", s.name}, {"params", s.params}, {"note", s.note}});
            emit(out, catalog_out);
            return kExitOk;
        }
        if (catalog_action == "emit") {
            if (catalog_in.catalog.empty())
                throw ParseError("catalog emit needs --catalog NAME");
            emit(catalog_entry_to_json(make_catalog(catalog_in.catalog, catalog_in.params)),
                 catalog_out);
            return kExitOk;
        }
        throw ParseError("unknown catalog action: " + catalog_action);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fairsect::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fairsect::GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
