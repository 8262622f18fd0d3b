#include "valdim/dynval.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace valdim {

bool atom_equal(const DivAtom& x, const DivAtom& y) {
    return equal(x.a, y.a) && equal(x.b, y.b);
}

std::string to_string(const DivAtom& x) {
    return x.a.to_string() + " | " + x.b.to_string();
}

namespace {

constexpr size_t kUniverseCap = 64;
constexpr int kNodeBudget = 256;
constexpr size_t kSplitCap = 96;
constexpr size_t kAv2ScanCap = 256;    // facts considered for disjunctive factoring
constexpr size_t kFactorsPerPair = 16;  // stored factorizations of one atom

enum class HornRule { Init, Scale, Trans, Sum };

struct FactRec {
    int a = -1, b = -1;
    HornRule rule = HornRule::Init;
    std::array<int, 2> prem = {-1, -1};  // fact indices
    int param = -1;                      // universe id of the scaling multiplier
};

struct FactState {
    std::vector<FactRec> facts;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<int>> by_left, by_right;  // universe id -> fact ids
    size_t processed = 0;  // facts below this were premises of a finished round

    bool has(int a, int b) const { return index.count({a, b}) != 0; }

    int add(int a, int b, HornRule rule, std::array<int, 2> prem, int param) {
        auto it = index.find({a, b});
        if (it != index.end()) return it->second;
        int id = static_cast<int>(facts.size());
        facts.push_back(FactRec{a, b, rule, prem, param});
        index.emplace(std::make_pair(a, b), id);
        by_left[a].push_back(id);
        by_right[b].push_back(id);
        return id;
    }
};

struct SplitInstance {
    std::string rule;   // "AV1" or "AV2"
    int a = -1, b = -1, x = -1;
    int premise = -1;   // fact id, AV2 only
    std::pair<int, int> left, right;  // the two disjunct atoms
};

struct Prover {
    RingPtr ring;
    std::vector<RingElement> uni;
    std::vector<std::vector<int>> mul_t, add_t;
    std::vector<int> neg_t;
    // ways to write an atom (u, v) as (a·x, b·x) inside the universe,
    // indexed by u·|universe| + v
    std::vector<std::vector<std::array<int, 3>>> factorizations;
    std::vector<std::pair<int, int>> goal_ids;
    int zero_id = -1, one_id = -1;
    int budget = kNodeBudget;

    int find(const RingElement& e) const {
        for (int i = 0; i < static_cast<int>(uni.size()); ++i)
            if (equal(uni[i], e)) return i;
        return -1;
    }

    int find_or_add(const RingElement& e, bool capped) {
        int id = find(e);
        if (id >= 0) return id;
        if (capped && uni.size() >= kUniverseCap) return -1;
        uni.push_back(e);
        return static_cast<int>(uni.size()) - 1;
    }

    void build_universe(const std::vector<DivAtom>& hyps, const std::vector<DivAtom>& goals,
                        const std::vector<RingElement>& k_sample, long depth) {
        find_or_add(RingElement::zero(ring), false);
        find_or_add(RingElement::one(ring), false);
        find_or_add(RingElement::constant(ring, Rat(-1)), false);
        for (const auto& h : hyps) {
            find_or_add(h.a, false);
            find_or_add(h.b, false);
        }
        for (const auto& g : goals) {
            find_or_add(g.a, false);
            find_or_add(g.b, false);
        }
        for (const auto& x : k_sample) find_or_add(x, false);
        long passes = std::max<long>(depth, 1);
        for (long p = 0; p < passes; ++p) {
            size_t before = uni.size();
            size_t n0 = before;
            for (size_t i = 0; i < n0 && uni.size() < kUniverseCap; ++i)
                find_or_add(neg(uni[i]), true);
            for (size_t i = 0; i < n0 && uni.size() < kUniverseCap; ++i)
                for (size_t j = i; j < n0 && uni.size() < kUniverseCap; ++j)
                    find_or_add(add(uni[i], uni[j]), true);
            for (size_t i = 0; i < n0 && uni.size() < kUniverseCap; ++i)
                for (size_t j = i; j < n0 && uni.size() < kUniverseCap; ++j)
                    find_or_add(mul(uni[i], uni[j]), true);
            if (uni.size() == before) break;
        }
        int n = static_cast<int>(uni.size());
        mul_t.assign(n, std::vector<int>(n, -1));
        add_t.assign(n, std::vector<int>(n, -1));
        neg_t.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            neg_t[i] = find(neg(uni[i]));
            for (int j = i; j < n; ++j) {
                int s = find(add(uni[i], uni[j]));
                add_t[i][j] = add_t[j][i] = s;
                int m = find(mul(uni[i], uni[j]));
                mul_t[i][j] = mul_t[j][i] = m;
            }
        }
        factorizations.assign(static_cast<size_t>(n) * n, {});
        for (int x = 0; x < n; ++x) {
            for (int a = 0; a < n; ++a) {
                if (mul_t[a][x] < 0) continue;
                for (int b = 0; b < n; ++b) {
                    if (mul_t[b][x] < 0) continue;
                    auto& list = factorizations[static_cast<size_t>(mul_t[a][x]) * n + mul_t[b][x]];
                    if (list.size() < kFactorsPerPair) list.push_back({a, b, x});
                }
            }
        }
        zero_id = find(RingElement::zero(ring));
        one_id = find(RingElement::one(ring));
    }

    FactState seed(const std::vector<DivAtom>& hyps, const std::vector<RingElement>& k_sample) {
        FactState st;
        st.by_left.assign(uni.size(), {});
        st.by_right.assign(uni.size(), {});
        for (const auto& h : hyps)
            st.add(find(h.a), find(h.b), HornRule::Init, {-1, -1}, -1);
        int minus_one = find(RingElement::constant(ring, Rat(-1)));
        st.add(one_id, minus_one, HornRule::Init, {-1, -1}, -1);
        for (const auto& x : k_sample)
            st.add(one_id, find(x), HornRule::Init, {-1, -1}, -1);
        return st;
    }

    // Goal before collapse, goals in declaration order; -1 when open.
    int closing_fact(const FactState& st, bool* is_collapse) const {
        for (const auto& g : goal_ids) {
            auto it = st.index.find(g);
            if (it != st.index.end()) {
                *is_collapse = false;
                return it->second;
            }
        }
        auto it = st.index.find({zero_id, one_id});
        if (it != st.index.end()) {
            *is_collapse = true;
            return it->second;
        }
        return -1;
    }

    // One saturation round, semi-naive: premises are the facts present at
    // round start, and every derivation uses at least one fact not yet
    // processed (old-against-old pairs were exhausted in earlier rounds of
    // this lineage). New facts get appended, so adjacency vectors are indexed
    // rather than iterated and each scan stops at the first out-of-round id.
    void round(FactState& st) const {
        size_t limit = st.facts.size();
        auto in_round = [&](int f) { return static_cast<size_t>(f) < limit; };
        for (size_t fi = st.processed; fi < limit; ++fi) {
            int a = st.facts[fi].a, b = st.facts[fi].b;
            for (size_t j = 0; j < st.by_left[b].size(); ++j) {
                int fj = st.by_left[b][j];
                if (!in_round(fj)) break;
                st.add(a, st.facts[fj].b, HornRule::Trans, {static_cast<int>(fi), fj}, -1);
            }
            for (size_t j = 0; j < st.by_right[a].size(); ++j) {
                int fj = st.by_right[a][j];
                if (!in_round(fj)) break;
                st.add(st.facts[fj].a, b, HornRule::Trans, {fj, static_cast<int>(fi)}, -1);
            }
            for (size_t j = 0; j < st.by_left[a].size(); ++j) {
                int fj = st.by_left[a][j];
                if (!in_round(fj)) break;
                int s = add_t[b][st.facts[fj].b];
                if (s >= 0) st.add(a, s, HornRule::Sum, {static_cast<int>(fi), fj}, -1);
            }
            for (int c = 0; c < static_cast<int>(uni.size()); ++c) {
                int pa = mul_t[a][c];
                int pb = mul_t[b][c];
                if (pa >= 0 && pb >= 0)
                    st.add(pa, pb, HornRule::Scale, {static_cast<int>(fi), -1}, c);
            }
        }
        st.processed = limit;
    }

    DivAtom atom_of(const FactRec& f) const { return DivAtom{uni[f.a], uni[f.b]}; }

    DynDerivation derivation_of(const FactState& st, const FactRec& f) const {
        DynDerivation d;
        d.conclusion = atom_of(f);
        switch (f.rule) {
            case HornRule::Scale:
                d.rule = "av2";
                d.premises = {atom_of(st.facts[f.prem[0]])};
                d.param = uni[f.param];
                break;
            case HornRule::Trans:
                d.rule = "Av1";
                d.premises = {atom_of(st.facts[f.prem[0]]), atom_of(st.facts[f.prem[1]])};
                break;
            case HornRule::Sum:
                d.rule = "Av2";
                d.premises = {atom_of(st.facts[f.prem[0]]), atom_of(st.facts[f.prem[1]])};
                break;
            case HornRule::Init:
                throw std::logic_error("seeded fact has no derivation");
        }
        return d;
    }

    // Derivations needed for fact `target`, restricted to facts created at
    // this node (index >= start), in insertion order.
    std::vector<DynDerivation> trimmed(const FactState& st, int target, size_t start) const {
        std::set<int> need;
        std::vector<int> stack = {target};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            if (f < 0 || static_cast<size_t>(f) < start) continue;
            if (st.facts[f].rule == HornRule::Init) continue;
            if (!need.insert(f).second) continue;
            stack.push_back(st.facts[f].prem[0]);
            stack.push_back(st.facts[f].prem[1]);
        }
        std::vector<DynDerivation> out;
        for (int f : need) out.push_back(derivation_of(st, st.facts[f]));
        return out;
    }

    std::vector<DynDerivation> all_derivations(const FactState& st, size_t start) const {
        std::vector<DynDerivation> out;
        for (size_t f = start; f < st.facts.size(); ++f)
            if (st.facts[f].rule != HornRule::Init)
                out.push_back(derivation_of(st, st.facts[f]));
        return out;
    }

    // Disjunctive instances in the order they are tried. Comparability
    // splits range over the terms of the sequent itself — hypotheses, goals
    // and branch assumptions (the seeded facts), not every derived fact —
    // and cancellation splits factor the oldest facts first. Instances
    // whose disjuncts are already facts decide nothing and are skipped.
    std::vector<SplitInstance> instances(const FactState& st) const {
        std::vector<SplitInstance> out;
        std::set<int> present_set;
        for (const auto& f : st.facts) {
            if (f.rule != HornRule::Init) continue;
            present_set.insert(f.a);
            present_set.insert(f.b);
        }
        for (const auto& g : goal_ids) {
            present_set.insert(g.first);
            present_set.insert(g.second);
        }
        std::vector<int> present(present_set.begin(), present_set.end());
        for (size_t i = 0; i < present.size(); ++i) {
            for (size_t j = i; j < present.size(); ++j) {
                int a = present[i], b = present[j];
                if (st.has(a, b) || st.has(b, a)) continue;
                SplitInstance s;
                s.rule = "AV1";
                s.a = a;
                s.b = b;
                s.left = {a, b};
                s.right = {b, a};
                out.push_back(s);
                if (out.size() >= kSplitCap) return out;
            }
        }
        int n = static_cast<int>(uni.size());
        size_t scan = std::min(st.facts.size(), kAv2ScanCap);
        for (size_t fi = 0; fi < scan; ++fi) {
            int u = st.facts[fi].a, v = st.facts[fi].b;
            for (const auto& f : factorizations[static_cast<size_t>(u) * n + v]) {
                int a = f[0], b = f[1], x = f[2];
                if (st.has(a, b) || st.has(zero_id, x)) continue;
                SplitInstance s;
                s.rule = "AV2";
                s.a = a;
                s.b = b;
                s.x = x;
                s.premise = static_cast<int>(fi);
                s.left = {a, b};
                s.right = {zero_id, x};
                out.push_back(s);
                if (out.size() >= kSplitCap) return out;
            }
        }
        return out;
    }

    std::optional<ProofNode> prove(FactState st, long depth) {
        if (--budget < 0) return std::nullopt;
        size_t start = st.facts.size();
        // Seeded facts at the root count as already present before any round.
        bool collapse = false;
        int hit = closing_fact(st, &collapse);
        for (long r = 0; r < depth && hit < 0; ++r) {
            if (st.processed == st.facts.size()) break;  // fixpoint
            round(st);
            hit = closing_fact(st, &collapse);
        }
        if (hit >= 0) {
            ProofNode n;
            n.derivations = trimmed(st, hit, start);
            n.close = collapse ? ProofNode::Close::Collapse : ProofNode::Close::Goal;
            n.closing = atom_of(st.facts[hit]);
            return n;
        }
        if (depth <= 0) return std::nullopt;
        for (const auto& inst : instances(st)) {
            FactState left = st;
            left.add(inst.left.first, inst.left.second, HornRule::Init, {-1, -1}, -1);
            auto c1 = prove(std::move(left), depth - 1);
            if (!c1) continue;
            FactState right = st;
            right.add(inst.right.first, inst.right.second, HornRule::Init, {-1, -1}, -1);
            auto c2 = prove(std::move(right), depth - 1);
            if (!c2) continue;
            ProofNode n;
            n.derivations = all_derivations(st, start);
            n.close = ProofNode::Close::Split;
            n.split_rule = inst.rule;
            if (inst.rule == "AV1") {
                n.split_terms = {uni[inst.a], uni[inst.b]};
            } else {
                n.split_terms = {uni[inst.a], uni[inst.b], uni[inst.x]};
                n.split_premise = atom_of(st.facts[inst.premise]);
            }
            n.children.push_back(std::move(*c1));
            n.children.push_back(std::move(*c2));
            return n;
        }
        return std::nullopt;
    }
};

void require_atoms(const RingPtr& ring, const std::vector<DivAtom>& atoms) {
    for (const auto& at : atoms) {
        if (at.a.ring != ring || at.b.ring != ring)
            throw std::invalid_argument("divisibility atom over a different ring");
    }
}

}  // namespace

DynOutcome dyn_entails(const RingPtr& ring, const std::vector<DivAtom>& hyps,
                       const std::vector<DivAtom>& goals, long depth,
                       const std::vector<RingElement>& k_sample) {
    if (!ring) throw std::invalid_argument("null ring");
    if (depth < 0) throw std::invalid_argument("negative prover depth");
    require_atoms(ring, hyps);
    require_atoms(ring, goals);
    for (const auto& x : k_sample)
        if (x.ring != ring) throw std::invalid_argument("sample element over a different ring");

    Prover pv;
    pv.ring = ring;
    pv.build_universe(hyps, goals, k_sample, depth);
    for (const auto& g : goals) pv.goal_ids.push_back({pv.find(g.a), pv.find(g.b)});
    FactState st = pv.seed(hyps, k_sample);

    DynOutcome out;
    out.depth = depth;
    auto node = pv.prove(std::move(st), depth);
    if (node) {
        ProofTree t;
        t.ring = ring;
        t.hyps = hyps;
        t.goals = goals;
        t.k_sample = k_sample;
        t.depth = depth;
        t.root = std::move(*node);
        out.proof = std::move(t);
    }
    return out;
}

namespace {

struct Replayer {
    const ProofTree& tree;
    std::string* diag;

    bool fail(const std::string& path, const std::string& why) const {
        if (diag) *diag = path + ": " + why;
        return false;
    }

    static bool contains(const std::vector<DivAtom>& facts, const DivAtom& at) {
        for (const auto& f : facts)
            if (atom_equal(f, at)) return true;
        return false;
    }

    bool check_derivation(const DynDerivation& d, const std::vector<DivAtom>& facts,
                          const std::string& path) const {
        for (const auto& p : d.premises)
            if (!contains(facts, p)) return fail(path, "premise not established: " + to_string(p));
        if (d.rule == "av2") {
            if (d.premises.size() != 1 || !d.param)
                return fail(path, "scaling takes one premise and a multiplier");
            const auto& p = d.premises[0];
            if (!equal(mul(p.a, *d.param), d.conclusion.a) ||
                !equal(mul(p.b, *d.param), d.conclusion.b))
                return fail(path, "scaled conclusion does not match the premise");
            return true;
        }
        if (d.rule == "Av1") {
            if (d.premises.size() != 2) return fail(path, "transitivity takes two premises");
            const auto& p = d.premises[0];
            const auto& q = d.premises[1];
            if (!equal(p.b, q.a)) return fail(path, "transitivity premises do not chain");
            if (!equal(d.conclusion.a, p.a) || !equal(d.conclusion.b, q.b))
                return fail(path, "transitive conclusion does not match the premises");
            return true;
        }
        if (d.rule == "Av2") {
            if (d.premises.size() != 2) return fail(path, "sum rule takes two premises");
            const auto& p = d.premises[0];
            const auto& q = d.premises[1];
            if (!equal(p.a, q.a)) return fail(path, "sum premises have different divisors");
            if (!equal(d.conclusion.a, p.a) || !equal(d.conclusion.b, add(p.b, q.b)))
                return fail(path, "sum conclusion does not match the premises");
            return true;
        }
        return fail(path, "unknown rule: " + d.rule);
    }

    bool walk(const ProofNode& n, std::vector<DivAtom> facts, const std::string& path) const {
        for (size_t i = 0; i < n.derivations.size(); ++i) {
            const auto& d = n.derivations[i];
            std::string dpath = path + ".derivations[" + std::to_string(i) + "]";
            if (!check_derivation(d, facts, dpath)) return false;
            facts.push_back(d.conclusion);
        }
        switch (n.close) {
            case ProofNode::Close::Goal: {
                if (!n.closing) return fail(path, "goal close without a closing atom");
                if (!contains(facts, *n.closing))
                    return fail(path, "closing atom is not a fact: " + to_string(*n.closing));
                if (!contains(tree.goals, *n.closing))
                    return fail(path, "closing atom is not a goal: " + to_string(*n.closing));
                return true;
            }
            case ProofNode::Close::Collapse: {
                if (!n.closing) return fail(path, "collapse close without a closing atom");
                if (!contains(facts, *n.closing))
                    return fail(path, "collapse atom is not a fact");
                if (!n.closing->a.is_zero() || !equal(n.closing->b, RingElement::one(tree.ring)))
                    return fail(path, "collapse close needs the fact 0 | 1");
                return true;
            }
            case ProofNode::Close::Split: {
                if (n.children.size() != 2) return fail(path, "split needs two children");
                DivAtom left, right;
                if (n.split_rule == "AV1") {
                    if (n.split_terms.size() != 2)
                        return fail(path, "AV1 split takes two terms");
                    left = DivAtom{n.split_terms[0], n.split_terms[1]};
                    right = DivAtom{n.split_terms[1], n.split_terms[0]};
                } else if (n.split_rule == "AV2") {
                    if (n.split_terms.size() != 3 || !n.split_premise)
                        return fail(path, "AV2 split takes three terms and a premise");
                    const auto& p = *n.split_premise;
                    if (!contains(facts, p))
                        return fail(path, "split premise is not a fact: " + to_string(p));
                    if (!equal(mul(n.split_terms[0], n.split_terms[2]), p.a) ||
                        !equal(mul(n.split_terms[1], n.split_terms[2]), p.b))
                        return fail(path, "split terms do not factor the premise");
                    left = DivAtom{n.split_terms[0], n.split_terms[1]};
                    right = DivAtom{RingElement::zero(tree.ring), n.split_terms[2]};
                } else {
                    return fail(path, "unknown split rule: " + n.split_rule);
                }
                std::vector<DivAtom> lf = facts, rf = facts;
                lf.push_back(left);
                rf.push_back(right);
                return walk(n.children[0], std::move(lf), path + ".children[0]") &&
                       walk(n.children[1], std::move(rf), path + ".children[1]");
            }
        }
        return fail(path, "malformed close");
    }
};

}  // namespace

bool replay_proof(const ProofTree& tree, std::string* diagnostic) {
    if (!tree.ring) {
        if (diagnostic) *diagnostic = "root: null ring";
        return false;
    }
    Replayer rp{tree, diagnostic};
    try {
        require_atoms(tree.ring, tree.hyps);
        require_atoms(tree.ring, tree.goals);
        std::vector<DivAtom> facts = tree.hyps;
        facts.push_back(
            DivAtom{RingElement::one(tree.ring), RingElement::constant(tree.ring, Rat(-1))});
        for (const auto& x : tree.k_sample) {
            if (x.ring != tree.ring) throw std::invalid_argument("sample over a different ring");
            facts.push_back(DivAtom{RingElement::one(tree.ring), x});
        }
        return rp.walk(tree.root, std::move(facts), "root");
    } catch (const std::invalid_argument& e) {
        return rp.fail("root", e.what());
    }
}

}  // namespace valdim
