#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "valdim/dynval.hpp"
#include "valdim/lattice.hpp"
#include "valdim/valuative.hpp"

using namespace valdim;
using valdim::testing::elem;
using valdim::testing::qring;

namespace {

DivAtom da(const RingPtr& r, const std::string& a, const std::string& b) {
    return DivAtom{elem(r, a), elem(r, b)};
}

// Q[t] with no relations, declared integral.
RingPtr qt() { return qring({"t"}, {}, true, true); }

}  // namespace

TEST_SUITE_BEGIN("dynval");

TEST_CASE("depth-zero closures") {
    auto r = qt();
    SUBCASE("the unit axiom closes immediately") {
        auto out = dyn_entails(r, {}, {da(r, "1", "-1")}, 0);
        REQUIRE(out.proof.has_value());
        CHECK(out.proof->root.derivations.empty());
        CHECK(out.proof->root.close == ProofNode::Close::Goal);
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("a hypothesis closes immediately") {
        auto out = dyn_entails(r, {da(r, "t", "t^2")}, {da(r, "t", "t^2")}, 0);
        REQUIRE(out.proof.has_value());
        CHECK(out.proof->root.derivations.empty());
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("a collapse hypothesis proves any goal") {
        auto out = dyn_entails(r, {da(r, "0", "1")}, {da(r, "t", "t+1")}, 0);
        REQUIRE(out.proof.has_value());
        CHECK(out.proof->root.close == ProofNode::Close::Collapse);
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("sampled subring elements are seeded as unit divisors") {
        auto out = dyn_entails(r, {}, {da(r, "1", "t^2+1")}, 0, {elem(r, "t^2+1")});
        REQUIRE(out.proof.has_value());
        CHECK(out.proof->root.derivations.empty());
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("no unit divisibility of a variable comes for free") {
        auto out = dyn_entails(r, {}, {da(r, "1", "t")}, 1);
        CHECK_FALSE(out.proof.has_value());
        CHECK(out.depth == 1);
    }
}

TEST_CASE("transitivity chains") {
    auto r = qt();
    std::vector<DivAtom> hyps = {da(r, "2", "t"), da(r, "t", "t^2"), da(r, "t^2", "t^3")};
    std::vector<DivAtom> goal = {da(r, "2", "t^3")};

    auto shallow = dyn_entails(r, hyps, goal, 1);
    CHECK_FALSE(shallow.proof.has_value());

    auto out = dyn_entails(r, hyps, goal, 2);
    REQUIRE(out.proof.has_value());
    CHECK(out.proof->root.close == ProofNode::Close::Goal);
    for (const auto& d : out.proof->root.derivations) CHECK(d.rule == "Av1");
    CHECK(replay_proof(*out.proof));

    auto deeper = dyn_entails(r, hyps, goal, 3);
    CHECK(deeper.proof.has_value());
}

TEST_CASE("scaling and sums") {
    auto r = qt();
    SUBCASE("divisibility is stable under multiplication") {
        auto out = dyn_entails(r, {da(r, "t", "t^2")}, {da(r, "t^2+t", "t^3+t^2")}, 1);
        REQUIRE(out.proof.has_value());
        REQUIRE(!out.proof->root.derivations.empty());
        const auto& last = out.proof->root.derivations.back();
        CHECK(last.rule == "av2");
        REQUIRE(last.param.has_value());
        CHECK(equal(*last.param, elem(r, "t+1")));
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("common divisors pass to sums") {
        auto out = dyn_entails(r, {da(r, "2", "t"), da(r, "2", "t^2")}, {da(r, "2", "t^2+t")}, 1);
        REQUIRE(out.proof.has_value());
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("integer divisibilities come from the unit axiom") {
        // 1 | -1 scales and sums into 1 | n for every integer n.
        auto out = dyn_entails(r, {}, {da(r, "1", "3")}, 3);
        REQUIRE(out.proof.has_value());
        CHECK(replay_proof(*out.proof));
    }
}

TEST_CASE("disjunctive splits") {
    auto r = qt();
    SUBCASE("any two terms compare") {
        auto out = dyn_entails(r, {}, {da(r, "t", "t^2"), da(r, "t^2", "t")}, 1);
        REQUIRE(out.proof.has_value());
        const auto& root = out.proof->root;
        CHECK(root.close == ProofNode::Close::Split);
        CHECK(root.split_rule == "AV1");
        REQUIRE(root.children.size() == 2);
        CHECK(root.children[0].close == ProofNode::Close::Goal);
        CHECK(root.children[1].close == ProofNode::Close::Goal);
        CHECK(replay_proof(*out.proof));
    }
    SUBCASE("a common factor cancels or is null") {
        auto out = dyn_entails(r, {da(r, "t", "t^2")}, {da(r, "1", "t"), da(r, "0", "t")}, 1);
        REQUIRE(out.proof.has_value());
        const auto& root = out.proof->root;
        CHECK(root.close == ProofNode::Close::Split);
        CHECK(root.split_rule == "AV2");
        REQUIRE(root.split_premise.has_value());
        CHECK(atom_equal(*root.split_premise, da(r, "t", "t^2")));
        CHECK(replay_proof(*out.proof));
    }
}

TEST_CASE("replay rejects corrupted trees") {
    auto r = qt();
    auto out = dyn_entails(r, {da(r, "t", "t^2")}, {da(r, "t^2+t", "t^3+t^2")}, 1);
    REQUIRE(out.proof.has_value());
    REQUIRE(replay_proof(*out.proof));

    SUBCASE("a scaling step with the wrong multiplier") {
        ProofTree bad = *out.proof;
        bool touched = false;
        for (auto& d : bad.root.derivations) {
            if (d.rule == "av2" && d.param && equal(*d.param, elem(r, "t+1"))) {
                d.param = elem(r, "t+2");
                touched = true;
            }
        }
        REQUIRE(touched);
        std::string why;
        CHECK_FALSE(replay_proof(bad, &why));
        CHECK(why.find("root.derivations[") != std::string::npos);
    }
    SUBCASE("a closing atom that is not a goal") {
        ProofTree bad = *out.proof;
        bad.root.closing = da(r, "t", "t^2");
        std::string why;
        CHECK_FALSE(replay_proof(bad, &why));
        CHECK(why.find("not a goal") != std::string::npos);
    }
    SUBCASE("a derivation whose premise was never established") {
        ProofTree bad = *out.proof;
        bad.root.derivations.clear();
        DynDerivation d;
        d.rule = "Av1";
        d.premises = {da(r, "t^2+t", "t"), da(r, "t", "t^3+t^2")};
        d.conclusion = da(r, "t^2+t", "t^3+t^2");
        bad.root.derivations.push_back(d);
        std::string why;
        CHECK_FALSE(replay_proof(bad, &why));
        CHECK(why.find("premise not established") != std::string::npos);
    }
    SUBCASE("an empty tree on a non-axiom sequent") {
        ProofTree bad = *out.proof;
        bad.root.derivations.clear();
        CHECK_FALSE(replay_proof(bad));
    }
}

TEST_CASE("fuzzed sequents replay and stay monotone") {
    auto r = qt();
    std::vector<RingElement> pool = {elem(r, "0"),   elem(r, "1"), elem(r, "-1"),
                                     elem(r, "2"),   elem(r, "t"), elem(r, "t+1"),
                                     elem(r, "t^2"), elem(r, "2*t")};
    std::mt19937 rng(20231107);
    auto pick = [&] { return pool[rng() % pool.size()]; };

    int proved = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<DivAtom> hyps, goals;
        int nh = static_cast<int>(rng() % 4);
        for (int h = 0; h < nh; ++h) hyps.push_back(DivAtom{pick(), pick()});
        int ng = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < ng; ++g) goals.push_back(DivAtom{pick(), pick()});
        // Bias half the corpus toward provable sequents.
        if (i % 2 == 0 && !hyps.empty()) {
            if (i % 4 == 0) {
                goals[0] = hyps[0];
            } else {
                RingElement c = pick();
                goals[0] = DivAtom{mul(hyps[0].a, c), mul(hyps[0].b, c)};
            }
        }

        auto shallow = dyn_entails(r, hyps, goals, 2);
        auto out = dyn_entails(r, hyps, goals, 3);
        if (shallow.proof.has_value()) CHECK(out.proof.has_value());
        if (out.proof.has_value()) {
            ++proved;
            std::string why;
            bool ok = replay_proof(*out.proof, &why);
            CHECK_MESSAGE(ok, "sequent ", i, ": ", why);
        }
    }
    CHECK(proved >= 30);
}

TEST_CASE("agreement with the valuative oracle") {
    // V'(t), V'(t^2) entail V'(t^3) on both routes: the certificate search
    // and the divisibility prover; the prover never refutes, so a proved
    // sequent can only agree with the oracle.
    auto r = qt();
    auto oracle = std::make_shared<ValuativeOracle>(r);
    int xt = oracle->intern(FracElement::whole(elem(r, "t")));
    int xt2 = oracle->intern(FracElement::whole(elem(r, "t^2")));
    int xt3 = oracle->intern(FracElement::whole(elem(r, "t^3")));
    auto dec = oracle->decide({xt, xt2}, {xt3});
    CHECK(dec.status == Tri::Proved);

    auto out = dyn_entails(r, {da(r, "1", "t"), da(r, "1", "t^2")}, {da(r, "1", "t^3")}, 2);
    REQUIRE(out.proof.has_value());
    CHECK(replay_proof(*out.proof));
    CHECK(dec.status != Tri::Refuted);
}

TEST_CASE("trivial ring collapses") {
    auto r = qring({"t"}, {"1"});
    auto out = dyn_entails(r, {}, {da(r, "0", "1")}, 0);
    REQUIRE(out.proof.has_value());
    CHECK(replay_proof(*out.proof));
}

TEST_SUITE_END();
