// lattice-helly: batch front end for the exact lattice-geometry toolkit.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latgeo/ballhull.hpp"
#include "latgeo/bounds.hpp"
#include "latgeo/expand.hpp"
#include "latgeo/geom.hpp"
#include "latgeo/io.hpp"
#include "latgeo/report.hpp"
#include "latgeo/search.hpp"
#include "latgeo/sumsets.hpp"
#include "latgeo/witness.hpp"

namespace {

using namespace latgeo;

int resolve_threads(int cli_threads) {
    if (cli_threads > 0) return cli_threads;
    if (const char* env = std::getenv("LATTICE_HELLY_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

std::string compact_points(const PointSet& set) {
    std::string out;
    for (const auto& p : set.points()) {
        if (!out.empty()) out += ";";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ",";
            out += p[i].get_str();
        }
    }
    return out;
}

void emit(const Report& report, bool json) {
    std::cout << (json ? render_json(report) : render_text(report));
}

void add_certificate(Report& report, const SearchCertificate& cert) {
    report.add("certificate.canonicalization", cert.canonicalization);
    report.add("certificate.exhaustive", cert.exhaustive ? "true" : "false");
    report.add("certificate.nodes_visited", std::to_string(cert.nodes_visited));
    report.add("certificate.vertex_cap", std::to_string(cert.vertex_cap));
    report.add("certificate.twice_area_cap", std::to_string(cert.twice_area_cap));
    report.add("certificate.width_cap", std::to_string(cert.width_cap));
    report.add("certificate.extent_cap", std::to_string(cert.extent_cap));
}

int cmd_bounds(int n, long k, bool json) {
    BoundReport br = bound_report(n, k);
    Report rep;
    rep.manifest.subcommand = "bounds";
    rep.manifest.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
    for (const auto& e : br.entries) {
        rep.add(e.name, format_rational(e.value));
        rep.add(e.name + ".kind", e.kind == BoundKind::Lower   ? "lower"
                                  : e.kind == BoundKind::Upper ? "upper"
                                                               : "info");
    }
    emit(rep, json);
    return 0;
}

int cmd_alpha(long k, int threads, bool json) {
    AlphaResult res = alpha_search(k, threads);
    Report rep;
    rep.manifest.subcommand = "alpha";
    rep.manifest.parameters = {{"k", std::to_string(k)}};
    rep.add("alpha", std::to_string(res.value));
    rep.add("witness", compact_points(res.witness));
    add_certificate(rep, res.certificate);
    emit(rep, json);
    return 0;
}

int cmd_ell(long k, int threads, bool json) {
    EllResult res = ell_search(k, threads);
    Report rep;
    rep.manifest.subcommand = "ell";
    rep.manifest.parameters = {{"k", std::to_string(k)}};
    rep.add("ell", std::to_string(res.value));
    rep.add("witness", compact_points(res.witness));
    add_certificate(rep, res.certificate);
    emit(rep, json);
    return 0;
}

int cmd_mu(int n, long s, long grid, bool json) {
    Box box{Point(n, mpz_class(0)), Point(n, mpz_class(grid - 1))};
    MuResult res = mu_c_search(n, s, box);
    Report rep;
    rep.manifest.subcommand = "mu";
    rep.manifest.parameters = {{"n", std::to_string(n)},
                               {"s", std::to_string(s)},
                               {"grid", std::to_string(grid)}};
    rep.add("mu_upper", std::to_string(res.value));
    rep.add("mu_lower", std::to_string(res.lower_bound));
    rep.add("exact", res.value == res.lower_bound ? "true" : "false");
    rep.add("witness", compact_points(res.witness));
    add_certificate(rep, res.certificate);
    emit(rep, json);
    return 0;
}

int cmd_bracket(long k, int threads, bool json) {
    BracketResult res = c2_bracket(k, threads);
    Report rep;
    rep.manifest.subcommand = "bracket";
    rep.manifest.parameters = {{"k", std::to_string(k)}};
    rep.add("lower", res.lower.get_str());
    rep.add("lower.source", res.lower_source);
    rep.add("upper", res.upper.get_str());
    rep.add("upper.source", res.upper_source);
    if (res.cited_upper) {
        rep.add("cited_upper", res.cited_upper->get_str());
        rep.add("cited_upper.source", res.cited_source);
    }
    rep.add("exhaustive", res.exhaustive ? "true" : "false");
    emit(rep, json);
    return 0;
}

int cmd_witness(const std::string& name, int n, long k, bool json) {
    WitnessConfig cfg;
    if (name == "k1") {
        cfg = k1_witness(n);
    } else if (name == "k2") {
        cfg = k2_witness(n);
    } else if (name == "collinear") {
        cfg = collinear_witness(n, k);
    } else {
        bool found = false;
        for (auto& fw : figure_witnesses())
            if (fw.name == name) {
                cfg = fw;
                found = true;
            }
        if (!found)
            throw std::invalid_argument(
                "unknown witness (use k1, k2, collinear, hexagon, octagon, heptagon)");
    }
    std::cout << pointset_to_string(cfg.v);
    WitnessVerification check = verify_witness(cfg.v, cfg.expected_nonvertex);
    Report rep;
    rep.manifest.subcommand = "witness";
    rep.manifest.parameters = {{"name", cfg.name},
                               {"n", std::to_string(cfg.dim)},
                               {"k", std::to_string(cfg.expected_nonvertex)}};
    rep.add("size", std::to_string(check.size));
    rep.add("expected_size", std::to_string(cfg.expected_size));
    rep.add("nonvertex", std::to_string(check.actual_k));
    rep.add("convex_position", check.convex_position ? "true" : "false");
    bool ok = check.ok && check.size == cfg.expected_size;
    rep.add("ok", ok ? "true" : "false");
    emit(rep, json);
    return ok ? 0 : 1;
}

int cmd_expand(const std::string& path, std::uint64_t seed, bool json) {
    HRep p = load_hrep_file(path);
    ExpansionResult res = bell_expand(p, seed);
    std::cout << hrep_to_string(res.expanded);
    PointSet facet_set(p.dim);
    for (const auto& v : res.facet_points) facet_set.insert(v);
    std::cout << pointset_to_string(facet_set);
    Report rep;
    rep.manifest.subcommand = "expand";
    rep.manifest.parameters = {{"file", path}};
    rep.manifest.seed = seed;
    rep.add("rows", std::to_string(res.expanded.rows.size()));
    rep.add("interior_points", std::to_string(res.original_interior.size()));
    rep.add("facet_points", compact_points(facet_set));
    rep.add("attempts", std::to_string(res.attempts));
    rep.add("inflation", std::to_string(res.inflation));
    rep.add("verified", "true");  // bell_expand throws when any postcondition fails
    emit(rep, json);
    return 0;
}

int cmd_ball(int n, long rmax, std::optional<std::uint64_t> center_seed, bool json) {
    if (n < 1 || rmax < 1) throw std::invalid_argument("ball: need n >= 1 and rmax >= 1");
    QPoint u(n, mpq_class(0));
    if (center_seed) u = generic_center(n, *center_seed);
    Report rep;
    rep.manifest.subcommand = "ball";
    rep.manifest.parameters = {{"n", std::to_string(n)}, {"rmax", std::to_string(rmax)}};
    if (center_seed) {
        rep.manifest.seed = *center_seed;
        std::string c;
        for (const auto& q : u) c += (c.empty() ? "" : ",") + format_rational(q);
        rep.add("center_direction", c);
    }
    emit(rep, json);
    std::cout << "r,N,v,k,max_edge_sq,inner_margin\n";
    bool checks_ok = true;
    for (long r = 1; r <= rmax; ++r) {
        BallSpec spec = scaled_ball(n, u, mpq_class(r));
        BallHullStats st = ball_hull_stats(spec);
        std::cout << r << "," << st.n_count.get_str() << "," << st.v_count << ","
                  << st.k_count.get_str() << "," << format_rational(st.max_edge_sq) << ","
                  << format_rational(st.inner_margin) << "\n";
        if (mpz_class(r) * r > n)
            checks_ok = checks_ok && inner_ball_check(spec) && max_edge_check(spec);
    }
    std::cout << "structure_checks=" << (checks_ok ? "pass" : "fail") << "\n";
    // Exponent summary over a log-spaced radius subset when the range allows.
    std::vector<long> fit_radii;
    for (long r = std::max<long>(2, n); r <= rmax && fit_radii.size() < 12;
         r = std::max(r + 1, r * 5 / 4))
        fit_radii.push_back(r);
    if (fit_radii.size() >= 5 && fit_radii.back() >= 10 * fit_radii.front()) {
        ExponentFit fit = exponent_fit(n, fit_radii, u);
        std::ostringstream os;
        os.precision(6);
        os << "fit.slope=" << fit.slope << "\nfit.intercept=" << fit.intercept
           << "\nfit.residual=" << fit.residual << "\nfit.target=" << fit.target << "\n";
        std::cout << os.str();
    } else {
        std::cout << "fit=skipped (need radii spanning a decade)\n";
    }
    return checks_ok ? 0 : 1;
}

void table_alpha2(RegressionTable& table, int threads) {
    for (long k = 0; k <= 5; ++k) {
        AlphaResult res = alpha_search(k, threads);
        table.add("alpha.k" + std::to_string(k), std::to_string(res.value),
                  "exhaustive-search");
    }
}

void table_bracket(RegressionTable& table, int threads) {
    for (long k = 0; k <= 5; ++k) {
        BracketResult res = c2_bracket(k, threads);
        table.add("bracket.k" + std::to_string(k),
                  "[" + res.lower.get_str() + "," + res.upper.get_str() + "]",
                  "exhaustive-search");
        if (res.cited_upper)
            table.add("bracket.k" + std::to_string(k) + ".cited_upper",
                      res.cited_upper->get_str(), res.cited_source);
    }
}

void table_ball_n2(RegressionTable& table) {
    for (long r = 1; r <= 10; ++r) {
        BallSpec spec{2, QPoint(2, mpq_class(0)), mpq_class(r)};
        BallHullStats st = ball_hull_stats(spec);
        table.add("ball.r" + std::to_string(r),
                  "N=" + st.n_count.get_str() + ",v=" + std::to_string(st.v_count) +
                      ",k=" + st.k_count.get_str(),
                  "exhaustive-search");
    }
}

void table_bounds_grid(RegressionTable& table) {
    for (int n = 1; n <= 6; ++n)
        for (long k = 0; k <= 10; ++k)
            table.add("averkov.n" + std::to_string(n) + ".k" + std::to_string(k),
                      averkov_linear(n, k).get_str(), "exact-formula");
}

int cmd_table(const std::string& name, int threads, bool json) {
    RegressionTable table;
    table.name = name;
    if (name == "alpha2") {
        table_alpha2(table, threads);
    } else if (name == "c2_bracket") {
        table_bracket(table, threads);
    } else if (name == "ball_n2") {
        table_ball_n2(table);
    } else if (name == "bounds_grid") {
        table_bounds_grid(table);
    } else {
        throw std::invalid_argument("unknown table (use alpha2, c2_bracket, ball_n2, bounds_grid)");
    }
    RunManifest manifest;
    manifest.subcommand = "table";
    manifest.parameters = {{"name", name}};
    std::cout << (json ? render_table_json(table, manifest) : render_table_text(table, manifest));
    return 0;
}

int cmd_selftest(int threads) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << "selftest." << name << "=" << (ok ? "pass" : "fail") << "\n";
        if (!ok) ++failures;
    };

    bool bounds_ok = true;
    for (int n = 1; n <= 10 && bounds_ok; ++n)
        for (long k = 0; k <= 100 && bounds_ok; ++k) {
            mpz_class av = averkov_linear(n, k), al = aliev_linear(n, k), be = bell_bound(n, k);
            bounds_ok = av <= al && al <= be && (k != 0 || (av == pow2(n) && al == pow2(n)));
        }
    check("bound_chain", bounds_ok);

    bool witness_ok = true;
    for (int n = 1; n <= 4 && witness_ok; ++n) {
        WitnessConfig w1 = k1_witness(n), w2 = k2_witness(n);
        witness_ok = verify_witness(w1.v, 1).ok && verify_witness(w2.v, 2).ok &&
                     static_cast<long>(w1.v.size()) == w1.expected_size &&
                     static_cast<long>(w2.v.size()) == w2.expected_size;
    }
    for (const auto& fw : figure_witnesses())
        witness_ok = witness_ok && verify_witness(fw.v, fw.expected_nonvertex).ok;
    check("witness_suite", witness_ok);

    long expected_alpha[3] = {4, 6, 6};
    bool alpha_ok = true;
    for (long k = 0; k <= 2; ++k)
        alpha_ok = alpha_ok && alpha_search(k, threads).value == expected_alpha[k];
    check("alpha_small", alpha_ok);

    Box grid{Point{0, 0}, Point{5, 5}};
    bool mu_ok = mu_c_search(2, 3, grid).value == 3 && mu_c_search(2, 4, grid).value == 5;
    check("mu_grid", mu_ok);

    BallSpec five{2, QPoint(2, mpq_class(0)), mpq_class(5)};
    BallHullStats st = ball_hull_stats(five);
    bool ball_ok = st.n_count == 81 && st.v_count == 12 && st.k_count == 69;
    for (long r = 2; r <= 10; ++r) {
        BallSpec spec{2, QPoint(2, mpq_class(0)), mpq_class(r)};
        ball_ok = ball_ok && inner_ball_check(spec) && max_edge_check(spec);
    }
    check("ball_stats", ball_ok);

    HRep square;
    square.dim = 2;
    square.add_row({mpq_class(1), mpq_class(0)}, 1);
    square.add_row({mpq_class(-1), mpq_class(0)}, 0);
    square.add_row({mpq_class(0), mpq_class(1)}, 1);
    square.add_row({mpq_class(0), mpq_class(-1)}, 0);
    bool expand_ok = true;
    try {
        ExpansionResult res = bell_expand(square, kDefaultSeed);
        expand_ok = res.facet_points.size() == 4 && res.original_interior.size() == 4;
        PointSet grown = enumerate_lattice_points(shrink_one_facet(res, 0));
        expand_ok = expand_ok && grown.size() == 5;
    } catch (const std::exception&) {
        expand_ok = false;
    }
    check("bell_expansion", expand_ok);

    PointSet a(1);
    a.insert(Point{0});
    a.insert(Point{1});
    a.insert(Point{3});
    bool sum_ok = plunnecke_check(a).holds && k_fold_sum(a, 2).size() == 6;
    check("sumset_sanity", sum_ok);

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for lattice point counts, hulls and facet expansion"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    int threads_opt = 0;
    std::uint64_t seed = kDefaultSeed;
    app.add_flag("--json", json, "emit JSON instead of key=value text");
    app.add_option("--threads", threads_opt,
                   "worker threads (default: LATTICE_HELLY_THREADS or 1)");
    app.add_option("--seed", seed, "random seed for perturbations and centers");

    int arg_n = 2;
    long arg_k = 0, arg_s = 2, arg_grid = 6, arg_rmax = 10;
    std::string arg_name, arg_file;
    std::optional<std::uint64_t> center_seed;

    auto* sc_bounds = app.add_subcommand("bounds", "named bound evaluators for one (n,k)");
    sc_bounds->add_option("n", arg_n)->required();
    sc_bounds->add_option("k", arg_k)->required();

    auto* sc_alpha = app.add_subcommand("alpha", "exhaustive planar vertex maximum");
    sc_alpha->add_option("k", arg_k)->required();

    auto* sc_ell = app.add_subcommand("ell", "forced extra lattice point threshold");
    sc_ell->add_option("k", arg_k)->required();

    auto* sc_mu = app.add_subcommand("mu", "grid minimum midpoint count");
    sc_mu->add_option("n", arg_n)->required();
    sc_mu->add_option("s", arg_s)->required();
    sc_mu->add_option("--grid", arg_grid, "grid side length (box [0,G-1]^n)");

    auto* sc_ball = app.add_subcommand("ball", "integer hulls of balls along a radius sweep");
    sc_ball->add_option("n", arg_n)->required();
    sc_ball->add_option("--rmax", arg_rmax, "largest radius");
    sc_ball->add_option("--center-seed", center_seed, "generic center seed (default: origin)");

    auto* sc_witness = app.add_subcommand("witness", "named lower-bound configurations");
    sc_witness->add_option("name", arg_name)->required();
    sc_witness->add_option("--n", arg_n, "dimension for the generated families");
    sc_witness->add_option("--k", arg_k, "diagonal point count for `collinear`");

    auto* sc_expand = app.add_subcommand("expand", "one lattice point per facet expansion");
    sc_expand->add_option("file", arg_file, "H-representation input")->required();

    auto* sc_bracket = app.add_subcommand("bracket", "two-sided planar c-bracket");
    sc_bracket->add_option("k", arg_k)->required();

    auto* sc_table = app.add_subcommand("table", "regression tables with provenance");
    sc_table->add_option("name", arg_name)->required();

    auto* sc_selftest = app.add_subcommand("selftest", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const int threads = resolve_threads(threads_opt);
    const auto start = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (sc_bounds->parsed()) rc = cmd_bounds(arg_n, arg_k, json);
        else if (sc_alpha->parsed()) rc = cmd_alpha(arg_k, threads, json);
        else if (sc_ell->parsed()) rc = cmd_ell(arg_k, threads, json);
        else if (sc_mu->parsed()) rc = cmd_mu(arg_n, arg_s, arg_grid, json);
        else if (sc_ball->parsed()) rc = cmd_ball(arg_n, arg_rmax, center_seed, json);
        else if (sc_witness->parsed()) rc = cmd_witness(arg_name, arg_n, arg_k == 0 ? 2 : arg_k, json);
        else if (sc_expand->parsed()) rc = cmd_expand(arg_file, seed, json);
        else if (sc_bracket->parsed()) rc = cmd_bracket(arg_k, threads, json);
        else if (sc_table->parsed()) rc = cmd_table(arg_name, threads, json);
        else if (sc_selftest->parsed()) rc = cmd_selftest(threads);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "threads=" << threads << " elapsed_ms=" << elapsed << "\n";
    return rc;
}
