// Command-line front end: every subcommand emits one machine-readable
// report (JSON by default, --csv for the tabular section) built from exact
// arithmetic only. Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parkpoly/checks.hpp"
#include "parkpoly/counting.hpp"
#include "parkpoly/families.hpp"
#include "parkpoly/numeric.hpp"
#include "parkpoly/polynomial.hpp"
#include "parkpoly/report.hpp"
#include "parkpoly/series.hpp"
#include "parkpoly/volume.hpp"

namespace {

using namespace parkpoly;

json jint(const Integer& v) { return v.get_str(); }
json jrat(const Rational& v) { return v.str(); }

json jpoint(const LatticePoint& v) {
    json a = json::array();
    for (const Coord c : v) a.push_back(c);
    return a;
}

void emit(const Report& r, bool csv) {
    if (csv)
        std::cout << render_csv(r);
    else
        std::cout << render_json(r);
}

Report cmd_volume(int n, Coord a, Coord b, const std::string& formula) {
    Report r;
    r.command = "volume";
    r.params = {{"n", n}, {"a", a}, {"b", b}, {"formula", formula}};
    std::vector<VolumeResult> results;
    if (formula == "closed" || formula == "all")
        results.push_back(nvol_closed_form(XpfParams(n, a, b)));
    if (formula == "recursive" || formula == "all")
        results.push_back(vol_recursive_generalized(n, a, b));
    for (const VolumeResult& v : results)
        r.rows.push_back({{"formula", v.source},
                          {"euclidean", jrat(v.euclidean)},
                          {"normalized", jint(v.normalized)}});
    if (formula == "all") {
        const bool agree = results[0].normalized == results[1].normalized &&
                           results[0].euclidean == results[1].euclidean;
        r.checks.push_back({"volume/formula-agreement", agree,
                            agree ? "closed and recursive agree"
                                  : "closed " + results[0].normalized.get_str() +
                                        " vs recursive " + results[1].normalized.get_str()});
    }
    return r;
}

Report cmd_fvector(int n, Coord a, Coord b, bool oracle) {
    Report r;
    r.command = "fvector";
    r.params = {{"n", n}, {"a", a}, {"b", b}, {"source", oracle ? "face-oracle" : "formula"}};
    const XpfParams p(n, a, b);
    const FVector f = oracle ? brute_force_faces(p) : f_vector_formula(p);
    for (size_t k = 0; k < f.size(); ++k)
        r.rows.push_back({{"dimension", k}, {"count", jint(f[k])}});
    return r;
}

Report cmd_vertices(int n, Coord a, Coord b) {
    Report r;
    r.command = "vertices";
    r.params = {{"n", n}, {"a", a}, {"b", b}};
    for (const LatticePoint& v : xpf_vertices(XpfParams(n, a, b)))
        r.rows.push_back({{"vertex", jpoint(v)}});
    return r;
}

void require_arity(const std::vector<Coord>& args, size_t want, const std::string& what) {
    if (args.size() != want)
        throw CLI::ValidationError("count " + what + " expects " + std::to_string(want) +
                                   " arguments");
}

Report cmd_count(const std::string& what, const std::vector<Coord>& args) {
    Report r;
    r.command = "count";
    r.params = {{"what", what}};
    for (size_t i = 0; i < args.size(); ++i) r.params["arg" + std::to_string(i)] = args[i];
    auto row = [&](const std::string& name, const Integer& v) {
        r.rows.push_back({{"quantity", name}, {"value", jint(v)}});
    };
    if (what == "parking") {
        require_arity(args, 3, what);
        row("x-parking functions", count_x_parking_functions(
                                       XpfParams(static_cast<int>(args[0]), args[1], args[2])));
    } else if (what == "vertices") {
        require_arity(args, 3, what);
        row("vertices",
            vertex_count_formula(XpfParams(static_cast<int>(args[0]), args[1], args[2])));
    } else if (what == "edges") {
        require_arity(args, 3, what);
        row("edges", edge_count_formula(XpfParams(static_cast<int>(args[0]), args[1], args[2])));
    } else if (what == "facets") {
        require_arity(args, 3, what);
        row("facets", facet_count_formula(XpfParams(static_cast<int>(args[0]), args[1], args[2])));
    } else if (what == "rational-vertices") {
        require_arity(args, 2, what);
        const Integer formula = rational_vertex_count(args[0], args[1]);
        const Integer oracle(rational_pf_vertices(args[0], args[1]).size());
        row("vertices (formula)", formula);
        row("vertices (dedupe oracle)", oracle);
        r.checks.push_back({"count/rational-vertex-agreement", formula == oracle,
                            formula == oracle
                                ? "formula matches the dedupe oracle"
                                : formula.get_str() + " vs " + oracle.get_str() +
                                      " (the oracle is authoritative)"});
    } else if (what == "rational-parking") {
        require_arity(args, 2, what);
        const Integer paths = count_rational_parking_functions_paths(args[0], args[1]);
        const Integer closed = int_pow(Integer(args[1]), static_cast<unsigned long>(args[0] - 1));
        row("labeled paths", paths);
        row("b^(a-1)", closed);
        r.checks.push_back({"count/rational-parking-agreement", paths == closed,
                            paths == closed ? "path enumeration matches b^(a-1)"
                                            : paths.get_str() + " vs " + closed.get_str()});
    } else if (what == "wipf-faces") {
        require_arity(args, 1, what);
        const WipfFaceCounts c = wipf_face_counts(static_cast<int>(args[0]));
        row("facets", c.facets);
        row("vertices", c.vertices);
        row("edges", c.edges);
    } else if (what == "permanent") {
        require_arity(args, 1, what);
        row("positive-permanent (0,1)-matrices",
            count_permanent_positive(static_cast<int>(args[0])));
    } else {
        throw CLI::ValidationError(
            "unknown count family: " + what +
            " (expected parking|vertices|edges|facets|rational-vertices|rational-parking|"
            "wipf-faces|permanent)");
    }
    return r;
}

std::vector<Coord> parse_comma_list(const std::string& s) {
    std::vector<Coord> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("bad integer list: " + s);
        out.push_back(std::stol(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list");
    return out;
}

Report cmd_ehrhart(const std::string& family, const std::vector<std::string>& args, Coord tmax) {
    if (tmax < 0) throw CLI::ValidationError("--tmax must be >= 0");
    ConstraintSystem sys;
    int dim = 0;
    Report r;
    r.command = "ehrhart";
    r.params = {{"family", family}, {"tmax", tmax}};
    if (family == "xpf" || family == "wipf") {
        if (args.size() != 3) throw CLI::ValidationError("ehrhart " + family + " expects n a b");
        const int n = std::stoi(args[0]);
        const Coord a = std::stol(args[1]), b = std::stol(args[2]);
        r.params["n"] = n;
        r.params["a"] = a;
        r.params["b"] = b;
        if (family == "xpf") {
            sys = xpf_constraints(XpfParams(n, a, b));
            dim = n;
        } else {
            // count through the lattice-preserving map onto the
            // Pitman-Stanley image; a = 1 drops the dimension by one
            std::vector<Coord> x(static_cast<size_t>(n), b);
            x[0] = a - 1;
            sys = ps_constraints(x);
            dim = a == 1 ? n - 1 : n;
        }
    } else if (family == "ps") {
        if (args.size() != 1)
            throw CLI::ValidationError("ehrhart ps expects one comma-separated list, e.g. 0,1,1");
        const std::vector<Coord> x = parse_comma_list(args[0]);
        r.params["x"] = jpoint(x);
        sys = ps_constraints(x);
        dim = static_cast<int>(x.size());
        for (const Coord xi : x) {
            if (xi != 0) break;
            --dim;  // leading zero bounds pin leading coordinates to 0
        }
    } else {
        throw CLI::ValidationError("unknown ehrhart family: " + family + " (expected xpf|wipf|ps)");
    }

    // enumeration-box guard: refuse searches whose orbit-compressed (or
    // prefix) representative count at t = tmax is out of reach
    const Integer budget = 200000000;
    Integer reps;
    if (sys.kind == ConstraintKind::symmetric) {
        const Coord span = tmax * (sys.cardinality_bounds.at(1) - sys.lower_bounds[0]) + 1;
        reps = binomial(span + sys.n - 1, sys.n);
    } else {
        reps = 1;
        for (const Coord pb : sys.prefix_bounds) reps *= Integer(tmax * pb + 1);
    }
    if (reps > budget)
        throw CLI::ValidationError("enumeration box too large (about " + reps.get_str() +
                                   " representatives at t=" + std::to_string(tmax) +
                                   "); lower --tmax or the instance size");

    std::vector<std::pair<Rational, Rational>> pts;
    pts.emplace_back(Rational(0), Rational(1));
    r.rows.push_back({{"t", 0}, {"count", "1"}});
    for (Coord t = 1; t <= tmax; ++t) {
        const Integer c = lattice_points_in_dilate(sys, t);
        r.rows.push_back({{"t", t}, {"count", jint(c)}});
        pts.emplace_back(Rational(t), Rational(c));
    }
    if (tmax >= dim) {
        const Polynomial ehr = lagrange_interpolate(pts);
        if (ehr.degree() > dim)
            throw std::logic_error("interpolated Ehrhart degree " + std::to_string(ehr.degree()) +
                                   " exceeds dimension " + std::to_string(dim));
        json coeffs = json::array();
        for (int i = 0; i <= ehr.degree(); ++i) coeffs.push_back(jrat(ehr.coeff(static_cast<size_t>(i))));
        const Rational lead = ehr.coeff(static_cast<size_t>(dim));
        r.extra["polynomial"] = {
            {"coefficients", coeffs},
            {"dimension", dim},
            {"leading", jrat(lead)},
            {"normalized_volume", jint((lead * Rational(factorial(dim))).to_integer())}};
    }
    return r;
}

Report cmd_series(const std::string& what, const std::vector<std::string>& args, int order) {
    if (order < 2) throw CLI::ValidationError("--order must be >= 2");
    Report r;
    r.command = "series";
    r.params = {{"what", what}, {"order", order}};
    if (what == "gb") {
        if (args.size() != 1) throw CLI::ValidationError("series gb expects b");
        const Coord b = std::stol(args[0]);
        r.params["b"] = b;
        const PowerSeries g = g_b_series(b, order);
        for (int i = 0; i <= order; ++i)
            r.rows.push_back({{"n", i}, {"coefficient", jrat(g.coeff(i))}});
        const bool ok = verify_functional_equation(b, order);
        r.checks.push_back({"series/functional-equation", ok,
                            ok ? "g_b = x exp(b g_b) through the truncation order"
                               : "functional equation violated"});
    } else if (what == "fab") {
        if (args.size() != 2) throw CLI::ValidationError("series fab expects a b");
        const Coord a = std::stol(args[0]), b = std::stol(args[1]);
        r.params["a"] = a;
        r.params["b"] = b;
        const PowerSeries f = f_ab_series(a, b, order);
        bool ok = true;
        for (int n = 0; n <= order; ++n) {
            r.rows.push_back({{"n", n}, {"coefficient", jrat(f.coeff(n))}});
            ok = ok && f.coeff(n) == vol_recursive_generalized(n, a, b).euclidean /
                                         Rational(factorial(n));
        }
        r.checks.push_back({"series/fab-matches-recursion", ok,
                            ok ? "coefficients equal V_n/n! from the volume recursion"
                               : "coefficient mismatch against the volume recursion"});
    } else if (what == "ck") {
        if (!args.empty()) throw CLI::ValidationError("series ck takes no positional arguments");
        const CkSequence seq = ck_sequence(order);
        for (int k = 0; k <= order; ++k)
            r.rows.push_back({{"k", k}, {"c_k", jint(seq.values[static_cast<size_t>(k)])}});
        const bool ok = ck_egf_check(order);
        r.checks.push_back({"series/ck-egf", ok,
                            ok ? "recurrence matches sqrt(1-2x) e^x coefficients"
                               : "EGF cross-check failed"});
    } else {
        throw CLI::ValidationError("unknown series: " + what + " (expected gb|fab|ck)");
    }
    return r;
}

Report cmd_verify(const std::string& suite) {
    Report r;
    r.command = "verify";
    r.params = {{"suite", suite}};
    r.checks = run_suite(suite);
    for (const CheckResult& c : r.checks)
        r.rows.push_back(
            {{"check", c.name}, {"pass", c.pass ? "PASS" : "FAIL"}, {"details", c.details}});
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration, volume and verification for parking function polytopes"};
    app.require_subcommand(1);
    bool csv = false;
    app.add_flag("--csv", csv, "render the tabular section as RFC 4180 CSV instead of JSON");

    int n = 0;
    Coord a = 0, b = 0;
    std::string formula = "all";
    auto* sc_volume = app.add_subcommand("volume", "volume of X_n(a,b) by formula");
    sc_volume->add_option("n", n)->required();
    sc_volume->add_option("a", a)->required();
    sc_volume->add_option("b", b)->required();
    sc_volume->add_option("--formula", formula)
        ->check(CLI::IsMember({"closed", "recursive", "all"}));
    sc_volume->fallthrough();

    bool oracle = false;
    auto* sc_fvector = app.add_subcommand("fvector", "f-vector of X_n(a,b)");
    sc_fvector->add_option("n", n)->required();
    sc_fvector->add_option("a", a)->required();
    sc_fvector->add_option("b", b)->required();
    sc_fvector->add_flag("--oracle", oracle, "exhaustive face enumeration instead of the formula (n <= 4)");
    sc_fvector->fallthrough();

    auto* sc_vertices = app.add_subcommand("vertices", "vertex list of X_n(a,b), lexicographic");
    sc_vertices->add_option("n", n)->required();
    sc_vertices->add_option("a", a)->required();
    sc_vertices->add_option("b", b)->required();
    sc_vertices->fallthrough();

    std::string what;
    std::vector<Coord> count_args;
    auto* sc_count = app.add_subcommand("count", "counting formulas and oracles");
    sc_count->add_option("what", what)->required();
    sc_count->add_option("args", count_args);
    sc_count->fallthrough();

    std::string family;
    std::vector<std::string> str_args;
    Coord tmax = 0;
    auto* sc_ehrhart = app.add_subcommand("ehrhart", "lattice point counts of t-dilates");
    sc_ehrhart->add_option("family", family)->required();
    sc_ehrhart->add_option("args", str_args);
    sc_ehrhart->add_option("--tmax", tmax)->required();
    sc_ehrhart->fallthrough();

    std::string series_what;
    std::vector<std::string> series_args;
    int order = 10;
    auto* sc_series = app.add_subcommand("series", "formal power series coefficients");
    sc_series->add_option("what", series_what)->required();
    sc_series->add_option("args", series_args);
    sc_series->add_option("--order", order);
    sc_series->fallthrough();

    std::string suite = "all";
    auto* sc_verify = app.add_subcommand("verify", "run the named verification suite");
    sc_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "volume", "faces", "series", "rational", "weakly"}));
    sc_verify->fallthrough();

    try {
        app.parse(argc, argv);
        Report r;
        if (sc_volume->parsed())
            r = cmd_volume(n, a, b, formula);
        else if (sc_fvector->parsed())
            r = cmd_fvector(n, a, b, oracle);
        else if (sc_vertices->parsed())
            r = cmd_vertices(n, a, b);
        else if (sc_count->parsed())
            r = cmd_count(what, count_args);
        else if (sc_ehrhart->parsed())
            r = cmd_ehrhart(family, str_args, tmax);
        else if (sc_series->parsed())
            r = cmd_series(series_what, series_args, order);
        else
            r = cmd_verify(suite);
        emit(r, csv);
        return report_exit_code(r);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
