/// Batch command-line front door: every library operation behind a
/// subcommand, JSON in and JSON out, one document per invocation.
///
/// Exit codes: 0 success, 1 domain error (the operation itself refused),
/// 2 usage error (bad arguments or malformed input). Failures print
/// {"error": {"code": ..., "message": ...}} so scripts never scrape prose.
///
/// Caps can be overridden through environment variables:
///   TORAL_ENUMERATION_CAP  element/net enumeration bound
///   TORAL_SCAN_CAP         Dirichlet denominator scan bound
///   TORAL_SEARCH_CAP       table solver / embedding search bound
///   TORAL_MAX_DIMENSION    Dirichlet dimension bound used by approx

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toral/approx.hpp"
#include "toral/corpus.hpp"
#include "toral/error.hpp"
#include "toral/finabelian.hpp"
#include "toral/lattice.hpp"
#include "toral/multitab.hpp"
#include "toral/serialize.hpp"
#include "toral/torusgroup.hpp"

namespace {

using toral::Json;
using toral::json_of;

/// Inline JSON, "@path" for a file, or "-" for standard input.
Json load_arg(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw toral::Error(toral::Errc::parse_error,
                               "cannot open input file " + arg.substr(1));
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else {
        text = arg;
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw toral::Error(toral::Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

toral::Rat parse_rat_arg(const std::string& text, const char* what) {
    std::optional<toral::Rat> r = toral::rat_from_string(text);
    if (!r)
        throw toral::Error(toral::Errc::parse_error,
                           std::string(what) + " must be a rational like 1/8, got '" + text + "'");
    return *r;
}

toral::Int parse_int_arg(const std::string& text, const char* what) {
    try {
        return toral::Int(text);
    } catch (const std::invalid_argument&) {
        throw toral::Error(toral::Errc::parse_error,
                           std::string(what) + " must be an integer, got '" + text + "'");
    }
}

unsigned long env_cap(const char* name, unsigned long fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return fallback;
    try {
        return std::stoul(raw);
    } catch (...) {
        throw toral::Error(toral::Errc::parse_error,
                           std::string(name) + " must be an unsigned integer");
    }
}

struct Caps {
    unsigned long enumeration = env_cap("TORAL_ENUMERATION_CAP", toral::default_enumeration_cap);
    unsigned long scan = env_cap("TORAL_SCAN_CAP", toral::ApproxCaps{}.max_scan);
    unsigned long search = env_cap("TORAL_SEARCH_CAP", toral::default_search_cap);
    unsigned long dimension = env_cap("TORAL_MAX_DIMENSION", toral::ApproxCaps{}.max_dimension);

    toral::ApproxCaps approx() const {
        toral::ApproxCaps caps;
        caps.enumeration = enumeration;
        caps.max_scan = scan;
        caps.max_dimension = dimension;
        return caps;
    }
};

toral::Weights parse_weights(const std::string& arg) {
    if (arg.empty()) return toral::Weights();
    return toral::weights_from_json(load_arg(arg));
}

/// `ann` goes both ways: a lattice answers with the subgroup it cuts out,
/// a subgroup answers with its annihilator lattice.
Json run_ann(const Json& input) {
    if (input.is_object() && input.contains("basis"))
        return json_of(toral::ann_of_lattice(toral::lattice_from_json(input)));
    if (input.is_object() && input.contains("annihilator"))
        return json_of(toral::annihilator_of(toral::subgroup_from_json(input)));
    throw toral::Error(toral::Errc::parse_error,
                       "expected a lattice {ambient, basis} or a subgroup {ambient, annihilator}");
}

Json points_json(const std::vector<toral::TorusPoint>& points) {
    Json out = Json::array();
    for (const toral::TorusPoint& x : points) out.push_back(json_of(x));
    return out;
}

Json run_gen_corpus(const std::string& kind, std::uint64_t seed, std::size_t count,
                    unsigned long max_order, std::size_t max_ambient, long max_abs,
                    unsigned long max_den, bool exhaustive) {
    toral::Rng rng(seed);
    Json items = Json::array();
    if (kind == "lattices") {
        for (std::size_t i = 0; i < count; ++i)
            items.push_back(json_of(toral::random_lattice(max_ambient, max_abs, rng)));
    } else if (kind == "tables") {
        for (std::size_t i = 0; i < count; ++i)
            items.push_back(json_of(toral::random_table(max_order, rng)));
    } else if (kind == "finabelian") {
        if (exhaustive) {
            for (const toral::FinAbelian& g : toral::abelian_chains(max_order))
                items.push_back(json_of(g));
        } else {
            std::vector<toral::FinAbelian> chains = toral::abelian_chains(max_order);
            for (std::size_t i = 0; i < count; ++i)
                items.push_back(json_of(chains[rng.below(chains.size())]));
        }
    } else if (kind == "subgroups") {
        for (std::size_t i = 0; i < count; ++i)
            items.push_back(json_of(
                toral::random_finite_subgroup(1 + rng.below(max_ambient), max_den, max_order,
                                              rng)));
    } else {
        throw toral::Error(toral::Errc::invalid_argument,
                           "unknown corpus kind '" + kind +
                               "' (expected lattices, tables, finabelian, or subgroups)");
    }
    return Json{{"kind", kind}, {"seed", seed}, {"items", std::move(items)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for compact subgroups of the torus,\n"
                 "finite abelian duality, Diophantine approximation certificates,\n"
                 "and finite multiplication tables. All input and output is JSON;\n"
                 "arguments may be inline JSON, @file, or - for standard input."};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string weights_arg;
    app.add_option("--weights", weights_arg,
                   "metric weights as a JSON array of positive rationals "
                   "(default: the dyadic sequence 2^-n)");

    std::optional<Json> result;
    Caps caps;

    // --- lattice layer ---
    std::string hnf_arg;
    CLI::App* hnf_cmd = app.add_subcommand("hnf", "canonical Hermite basis of a row span");
    hnf_cmd->add_option("matrix", hnf_arg, "integer matrix as a JSON array of rows")->required();
    hnf_cmd->callback(
        [&] { result = json_of(toral::hnf(toral::intmatrix_from_json(load_arg(hnf_arg)))); });

    std::string snf_arg;
    CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form U*m*V = D");
    snf_cmd->add_option("matrix", snf_arg, "integer matrix as a JSON array of rows")->required();
    snf_cmd->callback(
        [&] { result = json_of(toral::snf(toral::intmatrix_from_json(load_arg(snf_arg)))); });

    // --- torus subgroups ---
    std::string ann_arg;
    CLI::App* ann_cmd = app.add_subcommand(
        "ann", "annihilator duality: lattice -> subgroup, or subgroup -> lattice");
    ann_cmd->add_option("input", ann_arg, "lattice or subgroup JSON")->required();
    ann_cmd->callback([&] { result = run_ann(load_arg(ann_arg)); });

    std::string elements_arg;
    CLI::App* elements_cmd = app.add_subcommand("elements", "all points of a finite subgroup");
    elements_cmd->add_option("subgroup", elements_arg, "subgroup JSON")->required();
    elements_cmd->callback([&] {
        auto pts = toral::elements(toral::subgroup_from_json(load_arg(elements_arg)),
                                   caps.enumeration);
        result = Json{{"elements", points_json(pts)}};
    });

    std::string order_arg;
    CLI::App* order_cmd = app.add_subcommand("order", "order of a subgroup (null = infinite)");
    order_cmd->add_option("subgroup", order_arg, "subgroup JSON")->required();
    order_cmd->callback([&] {
        std::optional<toral::Int> n = toral::order(toral::subgroup_from_json(load_arg(order_arg)));
        result = Json{{"order", n ? json_of(*n) : Json(nullptr)}};
    });

    std::string components_arg;
    CLI::App* components_cmd =
        app.add_subcommand("components", "identity component and component count");
    components_cmd->add_option("subgroup", components_arg, "subgroup JSON")->required();
    components_cmd->callback([&] {
        toral::TorusSubgroup k = toral::subgroup_from_json(load_arg(components_arg));
        result = Json{{"component_count", json_of(toral::component_count(k))},
                      {"identity_component", json_of(toral::identity_component(k))},
                      {"is_totally_disconnected", toral::is_totally_disconnected(k)}};
    });

    std::string dist_a, dist_b;
    CLI::App* dist_cmd =
        app.add_subcommand("dist", "exact Hausdorff distance between finite subgroups");
    dist_cmd->add_option("a", dist_a, "subgroup JSON")->required();
    dist_cmd->add_option("b", dist_b, "subgroup JSON")->required();
    dist_cmd->callback([&] {
        toral::Rat d = toral::hausdorff_dist(toral::subgroup_from_json(load_arg(dist_a)),
                                             toral::subgroup_from_json(load_arg(dist_b)),
                                             parse_weights(weights_arg), caps.enumeration);
        result = Json{{"d_h", json_of(d)}};
    });

    std::string bounds_a, bounds_b, bounds_mesh{"1/16"};
    CLI::App* bounds_cmd = app.add_subcommand(
        "bounds", "certified Hausdorff bracket for possibly infinite subgroups");
    bounds_cmd->add_option("a", bounds_a, "subgroup JSON")->required();
    bounds_cmd->add_option("b", bounds_b, "subgroup JSON")->required();
    bounds_cmd->add_option("--mesh", bounds_mesh, "net mesh as a rational (default 1/16)");
    bounds_cmd->callback([&] {
        auto [lo, hi] = toral::hausdorff_bounds(
            toral::subgroup_from_json(load_arg(bounds_a)),
            toral::subgroup_from_json(load_arg(bounds_b)),
            parse_rat_arg(bounds_mesh, "--mesh"), parse_weights(weights_arg), caps.enumeration);
        result = Json{{"lower", json_of(lo)}, {"upper", json_of(hi)}};
    });

    std::string diam_arg;
    CLI::App* diam_cmd = app.add_subcommand("diam", "diameter of a finite point set");
    diam_cmd->add_option("points", diam_arg, "JSON array of points")->required();
    diam_cmd->callback([&] {
        Json j = load_arg(diam_arg);
        if (!j.is_array()) throw toral::Error(toral::Errc::parse_error, "expected a point array");
        std::vector<toral::TorusPoint> pts;
        for (const Json& p : j) pts.push_back(toral::point_from_json(p));
        result = Json{{"diameter", json_of(toral::diameter(pts, parse_weights(weights_arg)))}};
    });

    // --- approximation ---
    std::string dirichlet_arg, dirichlet_q{"2"};
    CLI::App* dirichlet_cmd =
        app.add_subcommand("dirichlet", "simultaneous rational approximation");
    dirichlet_cmd->add_option("alphas", dirichlet_arg, "JSON array of rationals")->required();
    dirichlet_cmd->add_option("--big-q", dirichlet_q, "quality bound Q (default 2)");
    dirichlet_cmd->callback([&] {
        Json j = load_arg(dirichlet_arg);
        if (!j.is_array())
            throw toral::Error(toral::Errc::parse_error, "expected an array of rationals");
        std::vector<toral::Rat> alphas;
        for (const Json& a : j) alphas.push_back(toral::rat_from_json(a));
        result = json_of(
            toral::dirichlet(alphas, parse_int_arg(dirichlet_q, "--big-q"), caps.scan));
    });

    std::string approx_arg, approx_eps{"1/8"};
    bool approx_shortcut = false;
    CLI::App* approx_cmd = app.add_subcommand(
        "approx", "finite subgroup within epsilon, with a replayable certificate");
    approx_cmd->add_option("subgroup", approx_arg, "subgroup JSON")->required();
    approx_cmd->add_option("--epsilon", approx_eps, "target distance (default 1/8)");
    approx_cmd->add_flag("--shortcut", approx_shortcut,
                         "skip the Dirichlet scan and reuse the net's common denominator");
    approx_cmd->callback([&] {
        auto [l, cert] = toral::finite_approx(
            toral::subgroup_from_json(load_arg(approx_arg)), parse_rat_arg(approx_eps, "--epsilon"),
            parse_weights(weights_arg), caps.approx(), approx_shortcut);
        result = Json{{"output", json_of(l)}, {"certificate", json_of(cert)}};
    });

    std::string verify_arg;
    CLI::App* verify_cmd =
        app.add_subcommand("verify-cert", "replay an approximation certificate");
    verify_cmd->add_option("certificate", verify_arg, "certificate JSON")->required();
    verify_cmd->callback([&] {
        bool valid = toral::verify_certificate(
            toral::certificate_from_json(load_arg(verify_arg)), caps.approx());
        result = Json{{"valid", valid}};
    });

    std::string net_arg, net_eps{"1/8"};
    CLI::App* net_cmd = app.add_subcommand("net", "epsilon/2-net of rational points");
    net_cmd->add_option("subgroup", net_arg, "subgroup JSON")->required();
    net_cmd->add_option("--epsilon", net_eps, "covering parameter (default 1/8)");
    net_cmd->callback([&] {
        auto pts = toral::epsilon_net(toral::subgroup_from_json(load_arg(net_arg)),
                                      parse_rat_arg(net_eps, "--epsilon"),
                                      parse_weights(weights_arg), caps.enumeration);
        result = Json{{"points", points_json(pts)}};
    });

    // --- quotients and duality ---
    std::string qtest_group, qtest_target;
    CLI::App* qtest_cmd =
        app.add_subcommand("quotient-test", "does the subgroup surject onto the abelian group?");
    qtest_cmd->add_option("subgroup", qtest_group, "subgroup JSON")->required();
    qtest_cmd->add_option("target", qtest_target, "finite abelian group JSON")->required();
    qtest_cmd->callback([&] {
        bool exists =
            toral::quotient_exists(toral::subgroup_from_json(load_arg(qtest_group)),
                                   toral::finabelian_from_json(load_arg(qtest_target)));
        result = Json{{"quotient_exists", exists}};
    });

    std::string transfer_map, transfer_group;
    CLI::App* transfer_cmd = app.add_subcommand(
        "transfer", "move a quotient map to a nearby subgroup under the delta/4 margin");
    transfer_cmd->add_option("map", transfer_map, "quotient map JSON")->required();
    transfer_cmd->add_option("subgroup", transfer_group, "target subgroup JSON")->required();
    transfer_cmd->callback([&] {
        toral::FiniteQuotientMap psi = toral::transfer_quotient(
            toral::quotient_map_from_json(load_arg(transfer_map)),
            toral::subgroup_from_json(load_arg(transfer_group)), parse_weights(weights_arg),
            caps.enumeration);
        result = json_of(psi);
    });

    std::string dual_arg;
    CLI::App* dual_cmd = app.add_subcommand("dual", "Pontryagin dual of a finite abelian group");
    dual_cmd->add_option("group", dual_arg, "finite abelian group JSON")->required();
    dual_cmd->callback(
        [&] { result = json_of(toral::dual(toral::finabelian_from_json(load_arg(dual_arg)))); });

    std::string embeds_a, embeds_b;
    CLI::App* embeds_cmd =
        app.add_subcommand("embeds", "does one finite abelian group embed in another?");
    embeds_cmd->add_option("a", embeds_a, "finite abelian group JSON")->required();
    embeds_cmd->add_option("b", embeds_b, "finite abelian group JSON")->required();
    embeds_cmd->callback([&] {
        bool ok = toral::embeds(toral::finabelian_from_json(load_arg(embeds_a)),
                                toral::finabelian_from_json(load_arg(embeds_b)));
        result = Json{{"embeds", ok}};
    });

    std::string qgroup_arg;
    CLI::App* qgroup_cmd =
        app.add_subcommand("quotient-group", "Z^n modulo a lattice, as free rank plus torsion");
    qgroup_cmd->add_option("lattice", qgroup_arg, "lattice JSON")->required();
    qgroup_cmd->callback([&] {
        toral::Lattice l = toral::lattice_from_json(load_arg(qgroup_arg));
        result = json_of(toral::quotient_group(l.ambient(), l));
    });

    std::string realize_arg;
    CLI::App* realize_cmd =
        app.add_subcommand("realize", "a torus subgroup isomorphic to a finite abelian group");
    realize_cmd->add_option("group", realize_arg, "finite abelian group JSON")->required();
    realize_cmd->callback([&] {
        result = json_of(toral::realize_in_torus(toral::finabelian_from_json(load_arg(realize_arg))));
    });

    // --- multiplication tables ---
    std::string tvalidate_arg;
    CLI::App* tvalidate_cmd = app.add_subcommand(
        "table-validate", "group axioms for a table; entry 0 marks an undefined cell");
    tvalidate_cmd->add_option("table", tvalidate_arg, "table JSON {size, entries}")->required();
    tvalidate_cmd->callback([&] {
        toral::PartialTable t = toral::partial_table_from_json(load_arg(tvalidate_arg));
        const unsigned n = static_cast<unsigned>(t.size());
        bool partial = false;
        for (unsigned i = 1; i <= n && !partial; ++i)
            for (unsigned j = 1; j <= n && !partial; ++j)
                if (t.entry(i, j) == 0 || t.entry(i, j) > n) partial = true;
        toral::TableCheck check;
        if (partial) {
            check = toral::validate_partial(t);
        } else {
            std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n));
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = 1; j <= n; ++j) rows[i - 1][j - 1] = t.entry(i, j);
            check = toral::validate_full(n, rows);
        }
        Json out{{"ok", check.ok}, {"partial", partial}};
        if (!check.ok) out["violation"] = check.violation;
        result = out;
    });

    std::string tsolve_table, tsolve_system;
    CLI::App* tsolve_cmd =
        app.add_subcommand("table-solve", "first solution of an equation/inequation system");
    tsolve_cmd->add_option("table", tsolve_table, "group table JSON")->required();
    tsolve_cmd->add_option("system", tsolve_system, "system JSON {equations, inequations}")
        ->required();
    tsolve_cmd->callback([&] {
        toral::FiniteGroupTable g = toral::table_from_json(load_arg(tsolve_table));
        toral::EqSystem s = toral::system_from_json(load_arg(tsolve_system));
        std::optional<std::vector<unsigned>> solution = toral::solve_system(s, g, caps.search);
        result = Json{{"solution", solution ? Json(*solution) : Json(nullptr)}};
    });

    std::string tpush_table, tpush_perm;
    CLI::App* tpush_cmd =
        app.add_subcommand("table-push", "relabel a group table along a permutation fixing 1");
    tpush_cmd->add_option("table", tpush_table, "group table JSON")->required();
    tpush_cmd->add_option("perm", tpush_perm, "JSON array, perm[i-1] = image of label i")
        ->required();
    tpush_cmd->callback([&] {
        Json j = load_arg(tpush_perm);
        if (!j.is_array())
            throw toral::Error(toral::Errc::parse_error, "expected a permutation array");
        std::vector<unsigned> perm;
        for (const Json& v : j) {
            if (!v.is_number_unsigned())
                throw toral::Error(toral::Errc::parse_error, "permutation entries are labels");
            perm.push_back(v.get<unsigned>());
        }
        result = json_of(
            toral::push_forward(toral::table_from_json(load_arg(tpush_table)), perm));
    });

    std::string tembeds_h, tembeds_g;
    CLI::App* tembeds_cmd =
        app.add_subcommand("table-embeds", "injective homomorphism existence between tables");
    tembeds_cmd->add_option("inner", tembeds_h, "candidate subgroup table JSON")->required();
    tembeds_cmd->add_option("outer", tembeds_g, "host group table JSON")->required();
    tembeds_cmd->callback([&] {
        bool ok = toral::embeds_table(toral::table_from_json(load_arg(tembeds_h)),
                                      toral::table_from_json(load_arg(tembeds_g)), caps.search);
        result = Json{{"embeds", ok}};
    });

    std::string phi_arg;
    CLI::App* phi_cmd =
        app.add_subcommand("phi", "relation lattice of an abelian table; Z^k/Phi recovers it");
    phi_cmd->add_option("table", phi_arg, "abelian group table JSON")->required();
    phi_cmd->callback(
        [&] { result = json_of(toral::phi_lattice(toral::table_from_json(load_arg(phi_arg)))); });

    // --- corpus generation ---
    std::string corpus_kind{"lattices"};
    std::uint64_t corpus_seed = 0;
    std::size_t corpus_count = 10;
    unsigned long corpus_max_order = 12;
    std::size_t corpus_max_ambient = 3;
    long corpus_max_abs = 10;
    unsigned long corpus_max_den = 8;
    bool corpus_exhaustive = false;
    CLI::App* corpus_cmd = app.add_subcommand(
        "gen-corpus", "deterministic corpora: lattices, tables, finabelian, subgroups");
    corpus_cmd->add_option("--kind", corpus_kind,
                           "lattices | tables | finabelian | subgroups (default lattices)");
    corpus_cmd->add_option("--seed", corpus_seed, "RNG seed (default 0)");
    corpus_cmd->add_option("--count", corpus_count, "number of items (default 10)");
    corpus_cmd->add_option("--max-order", corpus_max_order,
                           "order bound for tables/finabelian/subgroups (default 12)");
    corpus_cmd->add_option("--max-ambient", corpus_max_ambient,
                           "ambient bound for lattices/subgroups (default 3)");
    corpus_cmd->add_option("--max-abs", corpus_max_abs,
                           "entry bound for lattice generators (default 10)");
    corpus_cmd->add_option("--max-den", corpus_max_den,
                           "denominator bound for subgroup generators (default 8)");
    corpus_cmd->add_flag("--exhaustive", corpus_exhaustive,
                         "finabelian only: list every chain up to --max-order");
    corpus_cmd->callback([&] {
        result = run_gen_corpus(corpus_kind, corpus_seed, corpus_count, corpus_max_order,
                                corpus_max_ambient, corpus_max_abs, corpus_max_den,
                                corpus_exhaustive);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json err{{"error", {{"code", "usage_error"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return 2;
    } catch (const toral::Error& e) {
        Json err{{"error", {{"code", toral::errc_name(e.code())}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return e.code() == toral::Errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        Json err{{"error", {{"code", "internal_error"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return 1;
    }

    if (result) std::cout << result->dump(2) << '\n';
    return 0;
}
