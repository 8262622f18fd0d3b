#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "valdim/dynval.hpp"
#include "valdim/jsonio.hpp"

using namespace valdim;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string scratch_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/valdim-cli-XXXXXX";
        char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& command, const std::string& input) {
    static int counter = 0;
    std::string base = scratch_dir() + "/job" + std::to_string(counter++);
    {
        std::ofstream f(base + ".in", std::ios::binary);
        f << input;
    }
    std::string cmd = std::string(VALDIM_CLI_PATH) + " " + command + " < " + base + ".in > " +
                      base + ".out 2> " + base + ".err";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(base + ".out");
    return r;
}

RunResult run_cli(const std::string& command, const Json& input) {
    return run_cli(command, input.dump());
}

std::string fixture(const std::string& name) {
    return slurp(std::string(VALDIM_FIXTURE_DIR) + "/" + name);
}

Json qt_ring() {
    return Json{{"field", "Q"},
                {"vars", Json::array({"t"})},
                {"ideal", Json::array()},
                {"assume_reduced", true},
                {"assume_integral", true}};
}

Json xy_mod_xy_ring() {
    return Json{{"field", "Q"},
                {"vars", Json::array({"x", "y"})},
                {"ideal", Json::array({"x*y"})},
                {"assume_reduced", true},
                {"assume_integral", false}};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("documented exit codes") {
        // a verified certificate answers 0
        auto verify = run_cli("cert-verify", fixture("collapse_verify.in.json"));
        CHECK(verify.code == 0);
        CHECK(Json::parse(verify.out).at("ok") == true);

        // an entailment the oracle cannot settle within default bounds answers 2
        auto entail = run_cli("val-entail", Json{{"ring", qt_ring()},
                                                 {"left", Json::array()},
                                                 {"right", Json::array({"t"})}});
        CHECK(entail.code == 2);
        CHECK(Json::parse(entail.out).at("status") == "unknown");

        // a refuted membership answers 1
        Json ring{{"field", "Q"},
                  {"vars", Json::array({"x", "y"})},
                  {"ideal", Json::array({"x^2"})},
                  {"assume_reduced", false},
                  {"assume_integral", false}};
        auto member = run_cli("member", Json{{"ring", ring}, {"element", "x"}});
        CHECK(member.code == 1);
        CHECK(Json::parse(member.out).at("member") == false);
        auto member2 = run_cli("member", Json{{"ring", ring}, {"element", "x^2 + x^3*y^2"}});
        CHECK(member2.code == 0);
    }

    TEST_CASE("golden fixtures byte-compare") {
        auto verify = run_cli("cert-verify", fixture("collapse_verify.in.json"));
        CHECK(verify.code == 0);
        CHECK(verify.out == fixture("collapse_verify.out.json"));

        auto chain = run_cli("vdim-to-Vdim", fixture("chain_t_invt.in.json"));
        CHECK(chain.code == 0);
        CHECK(chain.out == fixture("chain_t_invt.out.json"));

        auto split = run_cli("split", fixture("split_xy.in.json"));
        CHECK(split.code == 0);
        CHECK(split.out == fixture("split_xy.out.json"));
    }

    TEST_CASE("repeated invocations are byte-identical") {
        Json in{{"ring", xy_mod_xy_ring()}, {"points", Json::array({"x", "y"})}};
        auto a = run_cli("kdim-search", in);
        auto b = run_cli("kdim-search", in);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }

    TEST_CASE("emitted certificates re-dispatch") {
        // search → verify
        Json in{{"ring", xy_mod_xy_ring()}, {"points", Json::array({"x", "y"})}};
        auto search = run_cli("kdim-search", in);
        REQUIRE(search.code == 0);
        Json found = Json::parse(search.out);
        auto verify = run_cli("cert-verify", Json{{"certificate", found.at("certificate")}});
        CHECK(verify.code == 0);
        CHECK(Json::parse(verify.out).at("ok") == true);

        // witnesses with orthogonal defects over the parent → glue → verify
        Json grlex2{{"kind", "grlex"}, {"n", 2}};
        auto witness = [](std::vector<std::pair<std::vector<int>, const char*>> terms) {
            Json jt = Json::array();
            for (auto& [e, c] : terms) jt.push_back(Json{{"exps", e}, {"coeff", c}});
            return Json{{"nind", 2}, {"laurent", false}, {"terms", jt}};
        };
        Json points = Json::array({"x + y", "y"});
        Json c1{{"ring", xy_mod_xy_ring()},
                {"points", points},
                {"order", grlex2},
                {"witness", witness({{{0, 1}, "1"}})},
                {"trailing", Json::array({0, 1})}};
        Json c2{{"ring", xy_mod_xy_ring()},
                {"points", points},
                {"order", grlex2},
                {"witness", witness({{{0, 1}, "1"}, {{1, 0}, "-1"}})},
                {"trailing", Json::array({0, 1})}};
        // neither branch witness verifies globally …
        CHECK(run_cli("cert-verify", Json{{"certificate", c1}}).code == 1);
        CHECK(run_cli("cert-verify", Json{{"certificate", c2}}).code == 1);
        // … but the glued one does
        auto glue = run_cli("glue", Json{{"first", c1}, {"second", c2}});
        REQUIRE(glue.code == 0);
        Json glued = Json::parse(glue.out).at("certificate");
        auto gv = run_cli("cert-verify", Json{{"certificate", glued}});
        CHECK(gv.code == 0);

        // normal forms are fixed points of parsing
        auto member = run_cli(
            "member", Json{{"ring", xy_mod_xy_ring()}, {"element", "x*y + x + 2*y - x"}});
        Json nf = Json::parse(member.out);
        auto again = run_cli("member",
                             Json{{"ring", xy_mod_xy_ring()}, {"element", nf.at("normal_form")}});
        CHECK(Json::parse(again.out).at("normal_form") == nf.at("normal_form"));
        CHECK(again.code == member.code);

        // a basis already in normal form reproduces itself
        Json gbin{{"field", "Q"},
                  {"vars", Json::array({"x", "y"})},
                  {"gens", Json::array({"x^2 + y", "x*y - 1"})}};
        auto gb = run_cli("gb", gbin);
        REQUIRE(gb.code == 0);
        Json basis = Json::parse(gb.out);
        gbin["gens"] = basis.at("basis");
        auto gb2 = run_cli("gb", gbin);
        CHECK(Json::parse(gb2.out).at("basis") == basis.at("basis"));
    }

    TEST_CASE("chain documents re-parse and their step certificates verify") {
        auto chain = run_cli("vdim-to-Vdim", fixture("chain_t_invt.in.json"));
        REQUIRE(chain.code == 0);
        Json doc = Json::parse(chain.out);
        Json subring = doc.at("chain").at("ring");
        int verified = 0;
        for (const auto& step : doc.at("chain").at("steps")) {
            if (step.at("kind") != "certificate") continue;
            auto v = run_cli("val-cert-verify",
                             Json{{"ring", subring}, {"certificate", step.at("certificate")}});
            CHECK(v.code == 0);
            ++verified;
        }
        CHECK(verified >= 1);
        // the subring presentation itself re-enters the parser
        auto probe = run_cli("member", Json{{"ring", subring}, {"element", "0"}});
        CHECK(probe.code == 0);
    }

    TEST_CASE("proof documents replay after a round trip") {
        Json in{{"ring", qt_ring()},
                {"hyps", Json::array({Json{{"a", "2"}, {"b", "t"}}, Json{{"a", "t"}, {"b", "t^2"}}})},
                {"goals", Json::array({Json{{"a", "2"}, {"b", "t^2"}}})},
                {"depth", 2}};
        auto run = run_cli("dyn-val-entail", in);
        REQUIRE(run.code == 0);
        Json doc = Json::parse(run.out);
        REQUIRE(doc.at("status") == "proved");
        ProofTree tree = prooftree_from_json(doc.at("proof"));
        std::string diag;
        CHECK(replay_proof(tree, &diag));
        CHECK(diag.empty());
    }

    TEST_CASE("lattice commands") {
        Json table{{"atoms", Json::array({"a", "b", "c"})},
                   {"sequents", Json::array({Json{{"lhs", Json::array({0})},
                                                  {"rhs", Json::array({1, 2})}}})}};
        auto proved = run_cli("lattice-leq",
                              Json{{"table", table},
                                   {"lhs", Json{{"meets", Json::array({Json::array({0})})}}},
                                   {"rhs", Json{{"meets", Json::array({Json::array({1}),
                                                                       Json::array({2})})}}}});
        CHECK(proved.code == 0);
        auto refuted = run_cli("lattice-leq",
                               Json{{"table", table},
                                    {"lhs", Json{{"meets", Json::array({Json::array({1})})}}},
                                    {"rhs", Json{{"meets", Json::array({Json::array({2})})}}}});
        CHECK(refuted.code == 1);
        CHECK(Json::parse(refuted.out).at("status") == "refuted");

        // Boolean-flavoured table: every atom complemented, so dimension 0
        Json btable{{"atoms", Json::array({"a", "na"})},
                    {"sequents",
                     Json::array({Json{{"lhs", Json::array({0, 1})}, {"rhs", Json::array()}},
                                  Json{{"lhs", Json::array()}, {"rhs", Json::array({0, 1})}}})}};
        auto kdim0 = run_cli("lattice-kdim", Json{{"table", btable}, {"n", 0}});
        CHECK(kdim0.code == 0);
        CHECK(Json::parse(kdim0.out).at("status") == "proved");

        // three-element chain 0 < a < 1 is not zero-dimensional: a has no complement
        Json chain3{{"atoms", Json::array({"a"})}, {"sequents", Json::array()}};
        auto kdim = run_cli("lattice-kdim", Json{{"table", chain3}, {"n", 0}});
        CHECK(kdim.code == 2);
        auto kdim1 = run_cli("lattice-kdim", Json{{"table", chain3}, {"n", 1}});
        CHECK(kdim1.code == 0);
    }

    TEST_CASE("remaining commands answer") {
        auto parsed = run_cli("parse", Json{{"ring", xy_mod_xy_ring()},
                                            {"polys", Json::array({"x*y + x", "(x + y)^2"})}});
        CHECK(parsed.code == 0);
        CHECK(Json::parse(parsed.out).at("polys") ==
              Json::array({"x", "x^2 + y^2"}));

        auto laurent = run_cli("parse", Json{{"ring", qt_ring()},
                                             {"polys", Json::array({"t^-1 + t"})},
                                             {"laurent", true}});
        CHECK(laurent.code == 0);

        auto rad = run_cli("radical-member", Json{{"ring", Json{{"field", "Q"},
                                                                {"vars", Json::array({"x"})},
                                                                {"ideal", Json::array({"x^3"})}}},
                                                  {"element", "x"}});
        CHECK(rad.code == 0);
        CHECK(Json::parse(rad.out).at("exponent") == 3);

        auto ann = run_cli("ann", Json{{"ring", xy_mod_xy_ring()}, {"element", "x"}});
        CHECK(ann.code == 0);
        CHECK(Json::parse(ann.out).at("generators") == Json::array({"y"}));

        auto stage = run_cli("rmin-stage",
                             Json{{"ring", xy_mod_xy_ring()}, {"elements", Json::array({"x", "y"})}});
        CHECK(stage.code == 0);
        CHECK(Json::parse(stage.out).at("components").size() == 4);

        auto dimv = run_cli("dimv-search",
                            Json{{"ring", qt_ring()},
                                 {"points", Json::array({"t", "t + 1"})},
                                 {"order", Json{{"kind", "grlex"}, {"n", 2}}}});
        CHECK(dimv.code == 0);

        // vdim ≤ n is probed through (2n+1)-tuples over the n-variable extension
        auto vd = run_cli("vdim-check",
                          Json{{"ring", qt_ring()},
                               {"n", 1},
                               {"tuples", Json::array({Json::array({"t", "Y1", "t*Y1"}),
                                                       Json::array({"Y1", "t", "t + 1"})})},
                               {"degree_bound", 4}});
        CHECK(vd.code == 0);
        CHECK(Json::parse(vd.out).at("all_found") == true);
    }

    TEST_CASE("input errors answer 3 with an error document") {
        auto bad_json = run_cli("member", std::string("{not json"));
        CHECK(bad_json.code == 3);
        CHECK(Json::parse(bad_json.out).contains("error"));

        auto unknown = run_cli("no-such-command", std::string("{}"));
        CHECK(unknown.code == 3);

        auto missing = run_cli("member", Json{{"ring", qt_ring()}});
        CHECK(missing.code == 3);
        Json err = Json::parse(missing.out);
        CHECK(err.at("error").at("message").get<std::string>().find("element") !=
              std::string::npos);

        auto bad_poly = run_cli("member", Json{{"ring", qt_ring()}, {"element", "t +"}});
        CHECK(bad_poly.code == 3);

        auto bad_exp = run_cli("parse", Json{{"ring", qt_ring()},
                                             {"polys", Json::array({"t^-1"})}});
        CHECK(bad_exp.code == 3);

        auto bad_atom = run_cli(
            "lattice-leq",
            Json{{"table", Json{{"atoms", Json::array({"a"})}, {"sequents", Json::array()}}},
                 {"lhs", Json{{"meets", Json::array({Json::array({5})})}}},
                 {"rhs", Json{{"meets", Json::array()}}}});
        CHECK(bad_atom.code == 3);
    }
}
