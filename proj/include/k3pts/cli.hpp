#pragma once

// The k3pts command line. run() parses, dispatches and maps errors to exit
// codes: 2 invalid arguments, 3 domain errors, 4 consistency failures.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3pts/acceptance.hpp"
#include "k3pts/config.hpp"
#include "k3pts/io.hpp"

namespace k3pts::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConsistency = 4;

namespace detail {

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::vector<Place> finite_places(const std::vector<std::int64_t>& ps) {
    std::vector<Place> out;
    for (auto p : ps) out.push_back(Place::finite(p));
    return out;
}

inline CurveModel load_curve(const std::string& path) { return io::curve_from_json(io::read_json_file(path)); }

inline LemmaOptions lemma_options(const Config& c) {
    LemmaOptions o;
    o.height.depth = c.doubling_depth;
    o.tolerance = c.height_tolerance;
    o.epsilon = c.nontorsion_epsilon;
    o.primes = c.prime_budget;
    return o;
}

inline PermGroup load_group(const std::string& spec) {
    if (spec == "S5") return PermGroup::symmetric(5);
    if (spec == "S6") return PermGroup::symmetric(6);
    json j = io::read_json_file(spec);
    const json& gens = j.is_object() ? j.at("generators") : j;
    if (!gens.is_array()) throw invalid_argument("group file must be a list of cycle strings or {\"generators\": [...]}");
    std::vector<Perm> g;
    for (const auto& s : gens) g.push_back(parse_cycles(s.get<std::string>()));
    return PermGroup::generate(g);
}

/// The sextic handed to the Galois estimate: f itself, or (x - c) f for an
/// odd quintic with c the least non-negative integer where f(c) != 0.
inline std::pair<IntPoly, std::int64_t> galois_sextic(const CurveModel& c) {
    if (c.kind() == CurveKind::even_family) return {c.f(), -1};
    for (std::int64_t k = 0;; ++k)
        if (c.f()(BigInt(k)) != 0) return {c.f() * IntPoly(std::vector<BigInt>{-k, 1}), k};
}

}  // namespace detail

/// Parses and runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational points, Frobenius data and Picard lattices for genus-2 Jacobians and their Kummer surfaces",
                 "k3pts"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::string> config_path;
    app.add_option("--config", config_path, "JSON config file (default ./k3pts.json when present)");
    std::optional<std::string> format_flag;
    app.add_option("--format", format_flag, "json or csv for tabular output (overrides the config)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::function<int(const Config&)> action;
    auto on = [&action](CLI::App* sub, std::function<int(const Config&)> fn) {
        sub->callback([&action, fn] { action = fn; });
    };

    // frobenius -----------------------------------------------------------
    std::string curve_path;
    std::int64_t prime = 0;
    bool with_simplicity = false;
    auto* frob = app.add_subcommand(
        "frobenius", "Characteristic polynomial of Frobenius from point counts over F_p and F_p^2. "
                     "Anchor: the p = 11 computation for the sextic family, with the simplicity criterion.");
    frob->add_option("--curve", curve_path, "curve JSON record")->required();
    frob->add_option("--prime", prime, "odd prime of good reduction")->required();
    frob->add_flag("--simplicity", with_simplicity, "also run the simplicity certificate over the config prime budget");
    on(frob, [&](const Config& cfg) {
        auto curve = detail::load_curve(curve_path);
        json j = io::to_json(char_poly(curve, prime));
        j["curve"] = io::curve_to_json(curve);
        if (with_simplicity) j["simplicity"] = io::to_json(simplicity_certificate(curve, cfg.prime_budget));
        detail::emit(out, j);
        return kExitOk;
    });

    // family --------------------------------------------------------------
    auto* fam = app.add_subcommand("family", "The sextic family x^6 + a x^2 + b with a toric place at p'. "
                                             "Anchor: the family construction and its local checks.");
    fam->require_subcommand(1);
    std::int64_t fam_p = 0, fam_count = 5;
    std::string fam_bound = "10000", fam_a, fam_b;
    auto* gen = fam->add_subcommand("gen", "Members by CRT in order of max(a, b). Anchor: the family construction.");
    gen->add_option("--p", fam_p, "the prime p' (not dividing 66)")->required();
    gen->add_option("--count", fam_count, "number of members")->check(CLI::PositiveNumber);
    gen->add_option("--bound", fam_bound, "bound on a and b");
    on(gen, [&](const Config&) {
        auto res = generate(fam_p, static_cast<std::size_t>(fam_count), parse_bigint(fam_bound));
        json members = json::array();
        for (const auto& m : res.members) members.push_back(io::to_json(m));
        detail::emit(out, {{"p_prime", fam_p}, {"complete", res.complete}, {"members", members}});
        return kExitOk;
    });
    auto* val = fam->add_subcommand("validate", "Checklist for one member. Anchor: the local conditions at p' and 11.");
    val->add_option("--p", fam_p, "the prime p'")->required();
    val->add_option("--a", fam_a, "coefficient a")->required();
    val->add_option("--b", fam_b, "coefficient b")->required();
    on(val, [&](const Config&) {
        detail::emit(out, io::to_json(validate({fam_p, parse_bigint(fam_a), parse_bigint(fam_b)})));
        return kExitOk;
    });

    // kummer --------------------------------------------------------------
    auto* kum = app.add_subcommand("kummer", "The quartic Kummer surface of y^2 = x^6 + a x^2 + b. Anchor: the explicit Kummer quartic.");
    kum->require_subcommand(1);
    std::string ka, kb, kx0, exclude_path, out_path;
    std::int64_t height = 0;
    std::optional<unsigned> threads_flag;
    auto* eq = kum->add_subcommand("equation", "Monomial coefficients in a fixed order. Anchor: the explicit quartic.");
    eq->add_option("--a", ka, "coefficient a")->required();
    eq->add_option("--b", kb, "coefficient b")->required();
    on(eq, [&](const Config&) {
        KummerQuartic K(parse_bigint(ka), parse_bigint(kb));
        json order = json::array(), coeffs = json::array();
        for (const auto& m : K.monomials()) {
            order.push_back(m.label);
            coeffs.push_back(io::big(m.coef));
        }
        detail::emit(out, {{"a", io::big(K.a())}, {"b", io::big(K.b())}, {"order", order}, {"coefficients", coeffs}});
        return kExitOk;
    });
    auto* search = kum->add_subcommand(
        "search", "Rational points with max|k_i| <= H, counted by log-height. Anchor: the point-count experiment.");
    search->add_option("--a", ka, "coefficient a")->required();
    search->add_option("--b", kb, "coefficient b")->required();
    search->add_option("--height", height, "box bound H")->required()->check(CLI::PositiveNumber);
    search->add_option("--exclude", exclude_path, "JSON list of forms, e.g. [\"k2^2 - 4*k1*k3\", \"special-curve\"]");
    search->add_option("--threads", threads_flag, "worker threads (overrides K3PTS_THREADS and the config)")
        ->check(CLI::Range(1u, 1024u));
    search->add_option("--out", out_path, "write the B,n table here; stdout then carries the JSON summary");
    on(search, [&](const Config& cfg) {
        KummerQuartic K(parse_bigint(ka), parse_bigint(kb));
        std::vector<Form> ex;
        if (!exclude_path.empty())
            for (const auto& f : io::read_json_file(exclude_path)) ex.push_back(io::parse_form(f.get<std::string>(), K));
        auto res = enumerate({K, height, ex, {}}, cfg.threads);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw invalid_argument("cannot write " + out_path);
            f << io::table_csv(res.table);
        } else if (cfg.output_format == OutputFormat::csv) {
            out << io::table_csv(res.table);
            return kExitOk;
        }
        json pts = json::array(), excl = json::array();
        for (const auto& p : res.points) pts.push_back(io::to_json(p));
        for (const auto& p : res.excluded) excl.push_back(io::to_json(p));
        json j{{"a", io::big(K.a())}, {"b", io::big(K.b())}, {"height_bound", height},
               {"count", res.points.size()}, {"points", pts}, {"excluded", excl}};
        if (out_path.empty()) j["table"] = io::to_json(res.table);
        detail::emit(out, j);
        return kExitOk;
    });
    auto* point = kum->add_subcommand(
        "point", "Image of [P - sigma(P)] for x(P) = x0 on the surface. Anchor: the special curve of points.");
    point->add_option("--a", ka, "coefficient a")->required();
    point->add_option("--b", kb, "coefficient b")->required();
    point->add_option("--x0", kx0, "x-coordinate, integer or n/d")->required();
    on(point, [&](const Config&) {
        KummerQuartic K(parse_bigint(ka), parse_bigint(kb));
        Rat x0 = parse_rat(kx0);
        auto pt = special_point(K, x0);
        bool on_surface = quartic_eval(K, pt) == 0;
        if (!on_surface) throw consistency_error("special point " + pt.str() + " is off the surface");
        detail::emit(out, {{"x0", io::rat(x0)},
                           {"point", io::to_json(pt)},
                           {"log_height", naive_height_P3(pt)},
                           {"on_surface", on_surface},
                           {"singular", is_singular_point(K, pt)}});
        return kExitOk;
    });

    // growth --------------------------------------------------------------
    auto* growth = app.add_subcommand("growth", "Growth-rate fits for count tables. Anchor: the point-count experiment.");
    growth->require_subcommand(1);
    std::string table_path, model = "exp";
    auto* fit = growth->add_subcommand(
        "fit", "Least-squares fit of log n against B (exp) or log B (pow). Anchor: the growth comparison.");
    fit->add_option("table", table_path, "CSV with header B,n")->required();
    fit->add_option("--model", model, "exp or pow")->check(CLI::IsMember({"exp", "pow"}));
    on(fit, [&](const Config&) {
        std::ifstream in(table_path);
        if (!in) throw invalid_argument("cannot open " + table_path);
        auto m = model == "exp" ? GrowthModel::exponential : GrowthModel::power;
        auto f = fit_growth(io::table_from_csv(in), m);
        detail::emit(out, {{"model", model}, {"parameter", f.parameter}, {"r_squared", f.r_squared}, {"rows_used", f.rows_used}});
        return kExitOk;
    });

    // jacobian ------------------------------------------------------------
    auto* jac = app.add_subcommand("jacobian", "Cantor arithmetic and heights on odd-quintic Jacobians. Anchor: the lemma on q.");
    jac->require_subcommand(1);
    std::vector<std::string> x0s;
    std::optional<int> depth_flag;
    auto* qpt = jac->add_subcommand("qpoint", "q = [P - sigma(P)] over Q(sqrt f(x0)). Anchor: the lemma on q.");
    qpt->add_option("--curve", curve_path, "odd-quintic curve JSON")->required();
    qpt->add_option("--x0", x0s, "x-coordinate, integer or n/d")->required()->expected(1);
    on(qpt, [&](const Config&) {
        detail::emit(out, io::to_json(antisymmetric_point(detail::load_curve(curve_path), parse_rat(x0s.at(0)))));
        return kExitOk;
    });
    auto* hgt = jac->add_subcommand("height", "Canonical heights of p and q by doubling. Anchor: the lemma on q.");
    hgt->add_option("--curve", curve_path, "odd-quintic curve JSON")->required();
    hgt->add_option("--x0", x0s, "x-coordinate, integer or n/d")->required()->expected(1);
    hgt->add_option("--depth", depth_flag, "doubling depth (overrides the config)")->check(CLI::Range(2, 64));
    on(hgt, [&](const Config& cfg) {
        auto curve = detail::load_curve(curve_path);
        auto ap = antisymmetric_point(curve, parse_rat(x0s.at(0)));
        if (ap.weierstrass) throw degenerate_input("x0 is the x-coordinate of a Weierstrass point");
        HeightOptions ho;
        ho.depth = depth_flag.value_or(cfg.doubling_depth);
        json j{{"x0", io::rat(ap.x0)}, {"d", io::big(ap.d)}};
        if (ap.q_field) {
            auto J = jacobian_over(curve, ap.d);
            j["height_p"] = io::to_json(canonical_height(J, *ap.p_field, ho));
            j["height_q"] = io::to_json(canonical_height(J, *ap.q_field, ho));
        } else {
            auto J = jacobian_over_Q(curve);
            j["height_p"] = io::to_json(canonical_height(J, *ap.p_rational, ho));
            j["height_q"] = io::to_json(canonical_height(J, *ap.q_rational, ho));
        }
        detail::emit(out, j);
        return kExitOk;
    });
    auto* lem = jac->add_subcommand(
        "lemma1", "Antisymmetry, height bound and non-torsion of q for each x0. Anchor: the lemma on q.");
    lem->add_option("--curve", curve_path, "odd-quintic curve JSON")->required();
    lem->add_option("--x0", x0s, "one or more x-coordinates")->required()->delimiter(',');
    on(lem, [&](const Config& cfg) {
        auto curve = detail::load_curve(curve_path);
        json reports = json::array();
        for (const auto& s : x0s) reports.push_back(io::to_json(lemma_q_report(curve, parse_rat(s), detail::lemma_options(cfg))));
        detail::emit(out, reports);
        return kExitOk;
    });

    // parity --------------------------------------------------------------
    auto* par = app.add_subcommand("parity", "Quadratic twists and root-number bookkeeping. Anchor: the root-number propositions.");
    par->require_subcommand(1);
    std::vector<std::int64_t> split_ps, nonsplit_ps;
    std::string real_mode = "free", descriptor_path;
    std::int64_t twist_count = 10, twist_d = 0;
    auto* tw = par->add_subcommand(
        "twists", "Squarefree d with prescribed splitting, smallest |d| first. Anchor: the twist proposition.");
    tw->add_option("--split", split_ps, "primes that must split")->delimiter(',');
    tw->add_option("--nonsplit", nonsplit_ps, "primes that must not split")->delimiter(',');
    tw->add_option("--real", real_mode, "split (d > 0), nonsplit (d < 0) or free")
        ->check(CLI::IsMember({"split", "nonsplit", "free"}));
    tw->add_option("--count", twist_count, "number of d")->check(CLI::PositiveNumber);
    on(tw, [&](const Config&) {
        auto s1 = detail::finite_places(split_ps), s2 = detail::finite_places(nonsplit_ps);
        if (real_mode == "split") s1.push_back(Place::infinity());
        if (real_mode == "nonsplit") s2.push_back(Place::infinity());
        json list = json::array();
        for (const auto& c : find_twists(s1, s2, static_cast<std::size_t>(twist_count))) list.push_back(io::to_json(c));
        detail::emit(out, list);
        return kExitOk;
    });
    auto* cert = par->add_subcommand(
        "certify", "Conditional rank growth in k(sqrt d). Anchor: the root-number proposition for abelian varieties.");
    cert->add_option("--descriptor", descriptor_path, "abelian variety descriptor JSON")->required();
    cert->add_option("--d", twist_d, "squarefree d")->required();
    on(cert, [&](const Config&) {
        auto A = io::descriptor_from_json(io::read_json_file(descriptor_path));
        detail::emit(out, io::to_json(rank_jump_certificate(A, twist_d)));
        return kExitOk;
    });

    // picard --------------------------------------------------------------
    auto* pic = app.add_subcommand("picard", "Galois action on the 16 nodes and the Picard lattice. Anchor: the Picard rank computation.");
    pic->require_subcommand(1);
    std::string group_spec;
    std::vector<std::int64_t> gram;
    std::vector<std::string> poly_coeffs;
    int prime_count = 50;
    auto* inv = pic->add_subcommand(
        "invariants", "Trace table and invariant rank on the node labels. Anchor: the S5 and S6 trace tables.");
    inv->add_option("--group", group_spec, "S5, S6, or a JSON file of generator cycles")->required();
    on(inv, [&](const Config&) {
        auto G = detail::load_group(group_spec);
        auto t = trace_table(G);
        if (group_spec == "S5") annotate_against(t, printed_s5_table(), 240);
        if (group_spec == "S6") annotate_against(t, printed_s6_table(), 720);
        json j{{"group", group_spec}, {"order", G.order()}};
        json tj = io::to_json(t);
        j["rank"] = invariant_rank(G);
        j["picard_rank"] = picard_rank(G);
        j["total"] = t.total;
        j["rows"] = tj["rows"];
        j["notes"] = tj["notes"];
        detail::emit(out, j);
        return kExitOk;
    });
    auto* fib = pic->add_subcommand(
        "fibration", "Isotropy over Q of a diagonal Gram matrix. Anchor: the elliptic fibration obstruction.");
    fib->add_option("--gram", gram, "diagonal entries, e.g. 4,-2,-10,-20")->required()->delimiter(',');
    on(fib, [&](const Config&) {
        std::vector<BigInt> diag(gram.begin(), gram.end());
        auto c = is_isotropic_over_Q(diag);
        json d = json::array();
        for (auto x : gram) d.push_back(x);
        detail::emit(out, {{"diagonal", d}, {"has_elliptic_fibration", c.isotropic}, {"certificate", io::to_json(c)}});
        return kExitOk;
    });
    auto* gal = pic->add_subcommand(
        "galois", "Frobenius cycle types of the Weierstrass sextic. Anchor: the S6 genericity assumption.");
    auto* curve_opt = gal->add_option("--curve", curve_path, "curve JSON");
    auto* poly_opt = gal->add_option("--poly", poly_coeffs, "sextic coefficients f0..f6")->delimiter(',');
    curve_opt->excludes(poly_opt);
    gal->add_option("--primes", prime_count, "number of good primes")->check(CLI::PositiveNumber);
    on(gal, [&](const Config&) {
        IntPoly f;
        json j;
        if (!curve_path.empty()) {
            auto curve = detail::load_curve(curve_path);
            auto [sextic, c] = detail::galois_sextic(curve);
            f = sextic;
            j["curve"] = io::curve_to_json(curve);
            if (c >= 0) j["extra_root"] = c;
        } else if (!poly_coeffs.empty()) {
            std::vector<BigInt> cs;
            for (const auto& s : poly_coeffs) cs.push_back(parse_bigint(s));
            f = IntPoly(std::move(cs));
        } else {
            throw invalid_argument("picard galois needs --curve or --poly");
        }
        j["sextic"] = io::poly(f);
        json e = io::to_json(galois_image_estimate(f, prime_count));
        for (auto it = e.begin(); it != e.end(); ++it) j[it.key()] = it.value();
        detail::emit(out, j);
        return kExitOk;
    });

    // reproduce-paper -----------------------------------------------------
    std::int64_t repro_height = 200;
    auto* repro = app.add_subcommand(
        "reproduce-paper", "Runs the ten acceptance checks and prints a PASS/FAIL table. "
                           "Anchor: every numeric statement checked by the acceptance suite.");
    repro->add_option("--height", repro_height, "box bound for the growth harness")->check(CLI::PositiveNumber);
    repro->add_option("--threads", threads_flag, "threads compared against one thread (default 4)")
        ->check(CLI::Range(1u, 1024u));
    on(repro, [&](const Config& cfg) {
        acceptance::Options o;
        o.threads = cfg.threads_set ? cfg.threads : 4;
        o.growth_height = repro_height;
        int failed = 0;
        for (const auto& r : acceptance::run_all(o)) {
            out << acceptance::format_line(r) << "\n";
            failed += !r.passed;
        }
        out << failed << " of 10 criteria failing\n";
        return failed ? kExitFailedChecks : kExitOk;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        Config cfg = load_config(config_path);
        if (format_flag) cfg.output_format = parse_output_format(*format_flag);
        if (threads_flag) {
            cfg.threads = *threads_flag;
            cfg.threads_set = true;
        }
        return action(cfg);
    } catch (const k3pts::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const k3pts::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const k3pts::consistency_error& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    }
}

}  // namespace k3pts::cli
