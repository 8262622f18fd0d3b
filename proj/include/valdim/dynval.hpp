#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valdim/ring.hpp"

namespace valdim {

/// Divisibility atom a ∣ b over a ring, components kept as normal-form
/// representatives.
struct DivAtom {
    RingElement a, b;
};

bool atom_equal(const DivAtom& x, const DivAtom& y);
std::string to_string(const DivAtom& x);

/// One Horn-rule application. The premises must already be facts when the
/// step runs; param carries the multiplier c of the scaling rule
/// a ∣ b ⊢ ac ∣ bc and is absent otherwise.
struct DynDerivation {
    std::string rule;  // "av2" (scale), "Av1" (transitivity), "Av2" (sum)
    std::vector<DivAtom> premises;
    DivAtom conclusion;
    std::optional<RingElement> param;
};

/// Node of a proof: the facts derived at this node in order, then a close.
/// A node closes on a goal atom, on the collapse atom 0 ∣ 1, or by a
/// two-branch disjunctive split — ⊢ a ∣ b or b ∣ a (AV1) on terms (a, b),
/// or ax ∣ bx ⊢ a ∣ b or 0 ∣ x (AV2) on terms (a, b, x) against an
/// established premise — with both children closed.
struct ProofNode {
    enum class Close { Goal, Collapse, Split };
    std::vector<DynDerivation> derivations;
    Close close = Close::Goal;
    std::optional<DivAtom> closing;        // goal / collapse closes
    std::string split_rule;                // "AV1" or "AV2"
    std::vector<RingElement> split_terms;  // AV1: a, b; AV2: a, b, x
    std::optional<DivAtom> split_premise;  // AV2: the fact ax ∣ bx
    std::vector<ProofNode> children;
};

struct ProofTree {
    RingPtr ring;
    std::vector<DivAtom> hyps;
    std::vector<DivAtom> goals;
    std::vector<RingElement> k_sample;
    long depth = 0;
    ProofNode root;
};

struct DynOutcome {
    std::optional<ProofTree> proof;
    long depth = 0;
};

/// Bounded forward-chaining prover for
///   hyps ⊢ goal_1 or … or goal_m
/// in the divisibility theory of the ring. The term universe is the
/// normal-form closure of the atom components together with 0, 1, -1 and
/// the k_sample elements under sum, product and negation, capped at 64
/// elements; the seeded facts are the hypotheses, 1 ∣ -1, and 1 ∣ x for
/// each sampled x. Saturation runs `depth` rounds of the Horn rules
/// (transitivity, sum, scaling by a universe element), then the
/// disjunctive axioms split, each split consuming one unit of depth; a
/// sequent is closed when a goal or 0 ∣ 1 becomes a fact. Exploration is
/// sequential in a fixed order (instances tried first-in first-out), so
/// the returned tree is the first complete one in that order; a global
/// node budget keeps the branch search finite. Everything not proved
/// within the bounds is Unknown — never Refuted.
DynOutcome dyn_entails(const RingPtr& ring, const std::vector<DivAtom>& hyps,
                       const std::vector<DivAtom>& goals, long depth,
                       const std::vector<RingElement>& k_sample = {});

/// Independent validator: replays the tree from the seeded facts,
/// re-checking every rule application against its axiom schema by
/// normal-form arithmetic, every split against its premise and terms, and
/// every close against the goals or the collapse atom. On failure writes
/// the offending node's path into *diagnostic and returns false.
bool replay_proof(const ProofTree& tree, std::string* diagnostic = nullptr);

}  // namespace valdim
