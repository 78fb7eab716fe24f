/// End-to-end tests of the command-line tool: every subcommand once,
/// outputs compared bit-for-bit against direct library calls, and the
/// exit-code contract (0 success, 1 domain error, 2 usage error).

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "toral/approx.hpp"
#include "toral/corpus.hpp"
#include "toral/finabelian.hpp"
#include "toral/lattice.hpp"
#include "toral/multitab.hpp"
#include "toral/serialize.hpp"
#include "toral/torusgroup.hpp"

using namespace toral;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_raw(const std::string& command) {
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

std::string shq(const std::string& s) {
    REQUIRE(s.find('\'') == std::string::npos);
    return "'" + s + "'";
}

CliResult run_cli(const std::vector<std::string>& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix.empty() ? std::string() : env_prefix + " ";
    cmd += TORAL_CLI_PATH;
    for (const std::string& a : args) cmd += " " + shq(a);
    return run_raw(cmd);
}

Json out_json(const CliResult& r) {
    CAPTURE(r.out);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

std::string error_code_of(const CliResult& r) {
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("error"));
    return j.at("error").at("code").get<std::string>();
}

std::string subgroup_json(std::size_t ambient, const std::string& ann_rows) {
    return "{\"ambient\":" + std::to_string(ambient) + ",\"annihilator\":" + ann_rows + "}";
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("hnf output is bit-identical to the library") {
        CliResult r = run_cli({"hnf", "[[4,6],[2,3]]"});
        Json expect = json_of(hnf(intmatrix_from_json(Json::parse("[[4,6],[2,3]]"))));
        CHECK(out_json(r).dump() == expect.dump());
    }

    TEST_CASE("snf output satisfies the transform contract") {
        CliResult r = run_cli({"snf", "[[2,4],[6,8]]"});
        SnfResult s = snf_from_json(out_json(r));
        IntMatrix m = intmatrix_from_json(Json::parse("[[2,4],[6,8]]"));
        CHECK(multiply(multiply(s.u, m), s.v) == s.d);
        CHECK(out_json(r).dump() == json_of(snf(m)).dump());
    }

    TEST_CASE("ann converts in both directions and round-trips") {
        Json lattice = Json::parse("{\"ambient\":2,\"basis\":[[2,0],[0,3]]}");
        CliResult fwd = run_cli({"ann", lattice.dump()});
        Json subgroup = out_json(fwd);
        CHECK(subgroup.dump() == json_of(ann_of_lattice(lattice_from_json(lattice))).dump());

        CliResult back = run_cli({"ann", subgroup.dump()});
        CHECK(out_json(back).dump() == json_of(lattice_from_json(lattice)).dump());

        CliResult bad = run_cli({"ann", "{\"ambient\":2}"});
        CHECK(bad.code == 2);
        CHECK(error_code_of(bad) == "parse_error");
    }

    TEST_CASE("order reports 6 for the diagonal (2,3) annihilator") {
        CliResult r = run_cli({"order", subgroup_json(2, "[[2,0],[0,3]]")});
        CHECK(out_json(r).at("order") == Json(6));

        CliResult inf = run_cli({"order", subgroup_json(2, "[[2,0]]")});
        CHECK(out_json(inf).at("order").is_null());
    }

    TEST_CASE("elements lists a finite subgroup and rejects infinite ones") {
        CliResult r = run_cli({"elements", subgroup_json(1, "[[4]]")});
        Json pts = out_json(r).at("elements");
        TorusSubgroup k = subgroup_from_json(Json::parse(subgroup_json(1, "[[4]]")));
        std::vector<TorusPoint> expect = elements(k);
        REQUIRE(pts.size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i)
            CHECK(pts[i].dump() == json_of(expect[i]).dump());

        CliResult inf = run_cli({"elements", subgroup_json(1, "[]")});
        CHECK(inf.code == 1);
        CHECK(error_code_of(inf) == "infinite_group");
    }

    TEST_CASE("components splits a mixed subgroup") {
        std::string arg = subgroup_json(2, "[[2,0]]");
        CliResult r = run_cli({"components", arg});
        Json out = out_json(r);
        TorusSubgroup k = subgroup_from_json(Json::parse(arg));
        CHECK(out.at("component_count") == Json(2));
        CHECK(out.at("is_totally_disconnected") == Json(false));
        CHECK(out.at("identity_component").dump() == json_of(identity_component(k)).dump());
    }

    TEST_CASE("dist of a subgroup with itself is 0/1") {
        std::string arg = subgroup_json(2, "[[2,0],[0,2]]");
        CliResult r = run_cli({"dist", arg, arg});
        CHECK(out_json(r).at("d_h") == Json("0/1"));
    }

    TEST_CASE("dist honors the global weights option") {
        std::string a = subgroup_json(2, "[[2,0],[0,1]]");
        std::string b = subgroup_json(2, "[[1,0],[0,1]]");
        TorusSubgroup ka = subgroup_from_json(Json::parse(a));
        TorusSubgroup kb = subgroup_from_json(Json::parse(b));

        CliResult plain = run_cli({"dist", a, b});
        CHECK(out_json(plain).at("d_h").get<std::string>() ==
              rat_to_string(hausdorff_dist(ka, kb)));

        CliResult weighted = run_cli({"--weights", "[\"1/1\",\"1/1\"]", "dist", a, b});
        Weights w = weights_from_json(Json::parse("[\"1/1\",\"1/1\"]"));
        CHECK(out_json(weighted).at("d_h").get<std::string>() ==
              rat_to_string(hausdorff_dist(ka, kb, w)));
    }

    TEST_CASE("bounds brackets the circle against its order-2 subgroup") {
        CliResult r = run_cli({"bounds", subgroup_json(1, "[]"), subgroup_json(1, "[[2]]"),
                               "--mesh", "1/32"});
        Json out = out_json(r);
        auto [lo, hi] = hausdorff_bounds(TorusSubgroup(1),
                                         subgroup_from_json(Json::parse(subgroup_json(1, "[[2]]"))),
                                         Rat(1, 32));
        CHECK(out.at("lower").get<std::string>() == rat_to_string(lo));
        CHECK(out.at("upper").get<std::string>() == rat_to_string(hi));
    }

    TEST_CASE("diam matches the library and rejects the empty set") {
        CliResult r = run_cli({"diam", "[[\"0/1\"],[\"1/4\"]]"});
        // coordinate 1 carries weight 1/2, so the circle gap 1/4 scales to 1/8
        CHECK(out_json(r).at("diameter") == Json("1/8"));

        CliResult empty = run_cli({"diam", "[]"});
        CHECK(empty.code == 1);
        CHECK(error_code_of(empty) == "invalid_argument");
    }

    TEST_CASE("dirichlet pins the two-coordinate example") {
        CliResult r = run_cli({"dirichlet", "[\"1/3\",\"1/2\"]", "--big-q", "2"});
        Json out = out_json(r);
        CHECK(out.at("q") == Json(2));
        CHECK(out.at("p").dump() == "[1,1]");

        CliResult capped = run_cli({"dirichlet", "[\"1/3\",\"1/2\"]", "--big-q", "2"},
                                   "TORAL_SCAN_CAP=1");
        CHECK(capped.code == 1);
        CHECK(error_code_of(capped) == "cap_exceeded");
    }

    TEST_CASE("approx emits a certificate that verify-cert replays") {
        CliResult r = run_cli({"approx", subgroup_json(1, "[]"), "--epsilon", "1/4"});
        Json out = out_json(r);
        REQUIRE(out.contains("output"));
        REQUIRE(out.contains("certificate"));
        TorusSubgroup l = subgroup_from_json(out.at("output"));
        CHECK(order(l).has_value());

        std::filesystem::path cert_path =
            std::filesystem::temp_directory_path() / "toral_cli_cert.json";
        {
            std::ofstream f(cert_path);
            f << out.at("certificate").dump();
        }
        CliResult ok = run_cli({"verify-cert", "@" + cert_path.string()});
        CHECK(out_json(ok).at("valid") == Json(true));

        Json tampered = out.at("certificate");
        tampered["big_m"] = 3;
        CliResult rejected = run_cli({"verify-cert", tampered.dump()});
        CHECK(out_json(rejected).at("valid") == Json(false));
        std::filesystem::remove(cert_path);
    }

    TEST_CASE("net lists four points on the circle at epsilon 1/4") {
        CliResult r = run_cli({"net", subgroup_json(1, "[]"), "--epsilon", "1/4"});
        CHECK(out_json(r).at("points").size() == 4);
    }

    TEST_CASE("quotient-test agrees with the annihilator criterion") {
        std::string k6 = subgroup_json(1, "[[6]]");
        CliResult yes = run_cli({"quotient-test", k6, "{\"invariant_factors\":[3]}"});
        CHECK(out_json(yes).at("quotient_exists") == Json(true));
        CliResult no = run_cli({"quotient-test", k6, "{\"invariant_factors\":[4]}"});
        CHECK(out_json(no).at("quotient_exists") == Json(false));
    }

    TEST_CASE("transfer succeeds on the same group and flags ambiguity") {
        std::string phi =
            "{\"domain\":" + subgroup_json(1, "[[2]]") +
            ",\"codomain\":{\"invariant_factors\":[2]},"
            "\"assignment\":[{\"point\":[\"0/1\"],\"value\":[0]},"
            "{\"point\":[\"1/2\"],\"value\":[1]}]}";
        CliResult same = run_cli({"transfer", phi, subgroup_json(1, "[[2]]")});
        Json out = out_json(same);
        CHECK(out.dump() == Json::parse(phi).dump());

        CliResult split = run_cli({"transfer", phi, subgroup_json(1, "[[4]]")});
        CHECK(split.code == 1);
        CHECK(error_code_of(split) == "transfer_ambiguous");
    }

    TEST_CASE("dual and embeds answer the finite abelian questions") {
        CliResult d = run_cli({"dual", "{\"invariant_factors\":[2,12]}"});
        CHECK(out_json(d).dump() == json_of(dual(FinAbelian::of({Int(2), Int(12)}))).dump());

        CliResult yes = run_cli({"embeds", "{\"invariant_factors\":[2]}",
                                 "{\"invariant_factors\":[4]}"});
        CHECK(out_json(yes).at("embeds") == Json(true));
        CliResult no = run_cli({"embeds", "{\"invariant_factors\":[2,2]}",
                                "{\"invariant_factors\":[4]}"});
        CHECK(out_json(no).at("embeds") == Json(false));
    }

    TEST_CASE("quotient-group splits rank and torsion") {
        CliResult r = run_cli({"quotient-group", "{\"ambient\":2,\"basis\":[[2,0]]}"});
        Lattice l = lattice_from_json(Json::parse("{\"ambient\":2,\"basis\":[[2,0]]}"));
        CHECK(out_json(r).dump() == json_of(quotient_group(2, l)).dump());
    }

    TEST_CASE("realize produces a subgroup of the requested order") {
        CliResult r = run_cli({"realize", "{\"invariant_factors\":[2,12]}"});
        TorusSubgroup k = subgroup_from_json(out_json(r));
        REQUIRE(order(k).has_value());
        CHECK(*order(k) == 24);
    }

    TEST_CASE("table-validate distinguishes full, partial, and broken tables") {
        FiniteGroupTable z4 = table_of(FinAbelian::of({Int(4)}));
        CliResult full = run_cli({"table-validate", json_of(z4).dump()});
        Json out = out_json(full);
        CHECK(out.at("ok") == Json(true));
        CHECK(out.at("partial") == Json(false));

        CliResult partial = run_cli(
            {"table-validate", "{\"size\":2,\"entries\":[[1,2],[2,0]]}"});
        Json pout = out_json(partial);
        CHECK(pout.at("partial") == Json(true));
        CHECK(pout.at("ok") == Json(true));

        // A commutative loop of order 5: a Latin square with identity that
        // fails associativity (the only group of order 5 is cyclic).
        CliResult broken = run_cli(
            {"table-validate",
             "{\"size\":5,\"entries\":[[1,2,3,4,5],[2,1,4,5,3],[3,5,1,2,4],"
             "[4,3,5,1,2],[5,4,2,3,1]]}"});
        Json bout = out_json(broken);
        CHECK(bout.at("ok") == Json(false));
        CHECK(bout.at("violation").get<std::string>().find("associativ") != std::string::npos);
    }

    TEST_CASE("table-solve returns the witness or null") {
        FiniteGroupTable z4 = table_of(FinAbelian::of({Int(4)}));
        std::string xx_is_one_x_not =
            "{\"equations\":[[{\"var\":1,\"exp\":1},{\"var\":1,\"exp\":1}]],"
            "\"inequations\":[[{\"var\":1,\"exp\":1}]]}";
        CliResult r = run_cli({"table-solve", json_of(z4).dump(), xx_is_one_x_not});
        Json out = out_json(r);
        EqSystem s = system_from_json(Json::parse(xx_is_one_x_not));
        std::optional<std::vector<unsigned>> expect = solve_system(s, z4);
        REQUIRE(expect.has_value());
        CHECK(out.at("solution").dump() == Json(*expect).dump());

        FiniteGroupTable z3 = table_of(FinAbelian::of({Int(3)}));
        CliResult none = run_cli({"table-solve", json_of(z3).dump(), xx_is_one_x_not});
        CHECK(out_json(none).at("solution").is_null());
    }

    TEST_CASE("table-push relabels exactly like the library") {
        FiniteGroupTable z4 = table_of(FinAbelian::of({Int(4)}));
        CliResult r = run_cli({"table-push", json_of(z4).dump(), "[1,3,2,4]"});
        CHECK(out_json(r).dump() ==
              json_of(push_forward(z4, {1u, 3u, 2u, 4u})).dump());

        CliResult bad = run_cli({"table-push", json_of(z4).dump(), "[1,1,2,4]"});
        CHECK(bad.code == 1);
        CHECK(error_code_of(bad) == "permutation_invalid");
    }

    TEST_CASE("table-embeds matches the library search") {
        FiniteGroupTable z2 = table_of(FinAbelian::of({Int(2)}));
        FiniteGroupTable z3 = table_of(FinAbelian::of({Int(3)}));
        FiniteGroupTable z4 = table_of(FinAbelian::of({Int(4)}));
        CliResult yes = run_cli({"table-embeds", json_of(z2).dump(), json_of(z4).dump()});
        CHECK(out_json(yes).at("embeds") == Json(true));
        CliResult no = run_cli({"table-embeds", json_of(z3).dump(), json_of(z4).dump()});
        CHECK(out_json(no).at("embeds") == Json(false));
    }

    TEST_CASE("phi emits the relation lattice and rejects non-abelian input") {
        FiniteGroupTable z2 = table_of(FinAbelian::of({Int(2)}));
        CliResult r = run_cli({"phi", json_of(z2).dump()});
        CHECK(out_json(r).dump() == json_of(phi_lattice(z2)).dump());

        FiniteGroupTable s3 = small_group_catalog(6).back();
        CliResult bad = run_cli({"phi", json_of(s3).dump()});
        CHECK(bad.code == 1);
        CHECK(error_code_of(bad) == "non_abelian");
    }

    TEST_CASE("gen-corpus is deterministic and well-formed") {
        std::vector<std::string> args{"gen-corpus", "--kind", "subgroups", "--seed", "7",
                                      "--count", "5"};
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.out == b.out);
        Json out = out_json(a);
        REQUIRE(out.at("items").size() == 5);
        for (const Json& item : out.at("items")) {
            TorusSubgroup k = subgroup_from_json(item);
            CHECK(order(k).has_value());
        }

        CliResult chains = run_cli({"gen-corpus", "--kind", "finabelian", "--exhaustive",
                                    "--max-order", "12"});
        CHECK(out_json(chains).at("items").size() == 17);

        CliResult bogus = run_cli({"gen-corpus", "--kind", "widgets"});
        CHECK(bogus.code == 1);
        CHECK(error_code_of(bogus) == "invalid_argument");
    }

    TEST_CASE("usage errors exit 2 with a usage_error payload") {
        CliResult none = run_cli({});
        CHECK(none.code == 2);
        CHECK(error_code_of(none) == "usage_error");

        CliResult unknown = run_cli({"frobnicate"});
        CHECK(unknown.code == 2);

        CliResult bad_json = run_cli({"hnf", "[[1,"});
        CHECK(bad_json.code == 2);
        CHECK(error_code_of(bad_json) == "parse_error");
    }

    TEST_CASE("stdin and @file inputs match inline arguments") {
        CliResult inline_arg = run_cli({"hnf", "[[4,6],[2,3]]"});

        std::string cmd = std::string("printf '%s' '[[4,6],[2,3]]' | ") + TORAL_CLI_PATH + " hnf -";
        CliResult from_stdin = run_raw(cmd);
        CHECK(from_stdin.code == 0);
        CHECK(from_stdin.out == inline_arg.out);

        std::filesystem::path path =
            std::filesystem::temp_directory_path() / "toral_cli_matrix.json";
        {
            std::ofstream f(path);
            f << "[[4,6],[2,3]]";
        }
        CliResult from_file = run_cli({"hnf", "@" + path.string()});
        CHECK(from_file.code == 0);
        CHECK(from_file.out == inline_arg.out);
        std::filesystem::remove(path);

        CliResult missing = run_cli({"hnf", "@/nonexistent/toral.json"});
        CHECK(missing.code == 2);
        CHECK(error_code_of(missing) == "parse_error");
    }
}
