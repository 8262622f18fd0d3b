#include "valdim/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace valdim {

std::string to_string(Tri t) {
    switch (t) {
        case Tri::Proved: return "proved";
        case Tri::Refuted: return "refuted";
        default: return "unknown";
    }
}

Decision Decision::proved(nlohmann::json ev) { return Decision{Tri::Proved, std::move(ev), 0}; }
Decision Decision::refuted(nlohmann::json ev) { return Decision{Tri::Refuted, std::move(ev), 0}; }
Decision Decision::unknown(long bound, nlohmann::json ev) {
    return Decision{Tri::Unknown, std::move(ev), bound};
}

LatticeTerm LatticeTerm::bottom() { return LatticeTerm{}; }

LatticeTerm LatticeTerm::top() {
    LatticeTerm t;
    t.meets.emplace_back();
    return t;
}

LatticeTerm LatticeTerm::atom(int id) { return meet_of({id}); }

LatticeTerm LatticeTerm::meet_of(std::vector<int> atoms) {
    LatticeTerm t;
    t.meets.push_back(std::move(atoms));
    t.canonicalize();
    return t;
}

void LatticeTerm::canonicalize() {
    for (auto& m : meets) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::sort(meets.begin(), meets.end());
    meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
    // antichain: drop any meet that contains another meet
    std::vector<std::vector<int>> kept;
    for (size_t i = 0; i < meets.size(); ++i) {
        bool absorbed = false;
        for (size_t j = 0; j < meets.size() && !absorbed; ++j) {
            if (i == j) continue;
            const auto& small = meets[j];
            const auto& big = meets[i];
            if (small.size() > big.size()) continue;
            if (small.size() == big.size() && j > i) continue;  // keep the first of duplicates
            if (std::includes(big.begin(), big.end(), small.begin(), small.end()))
                absorbed = true;
        }
        if (!absorbed) kept.push_back(meets[i]);
    }
    meets = std::move(kept);
}

LatticeTerm meet(const LatticeTerm& a, const LatticeTerm& b) {
    LatticeTerm r;
    for (const auto& ma : a.meets)
        for (const auto& mb : b.meets) {
            std::vector<int> u = ma;
            u.insert(u.end(), mb.begin(), mb.end());
            r.meets.push_back(std::move(u));
        }
    r.canonicalize();
    return r;
}

LatticeTerm join(const LatticeTerm& a, const LatticeTerm& b) {
    LatticeTerm r = a;
    r.meets.insert(r.meets.end(), b.meets.begin(), b.meets.end());
    r.canonicalize();
    return r;
}

bool term_equal(const LatticeTerm& a, const LatticeTerm& b) { return a.meets == b.meets; }

std::string term_to_string(const LatticeTerm& t, const std::function<std::string(int)>& name) {
    if (t.is_bottom()) return "0";
    if (t.is_top()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < t.meets.size(); ++i) {
        if (i) out << " v ";
        for (size_t j = 0; j < t.meets[i].size(); ++j) {
            if (j) out << "^";
            out << name(t.meets[i][j]);
        }
    }
    return out.str();
}

namespace {

// DNF -> CNF by distribution, minimized to an antichain; nullopt past the cap.
std::optional<std::vector<std::vector<int>>> to_cnf(const LatticeTerm& t, long cap) {
    std::vector<std::vector<int>> clauses = {{}};
    for (const auto& m : t.meets) {
        std::vector<std::vector<int>> next;
        for (const auto& clause : clauses)
            for (int a : m) {
                std::vector<int> c = clause;
                c.push_back(a);
                std::sort(c.begin(), c.end());
                c.erase(std::unique(c.begin(), c.end()), c.end());
                next.push_back(std::move(c));
                if (static_cast<long>(next.size()) > cap) return std::nullopt;
            }
        clauses = std::move(next);
    }
    std::sort(clauses.begin(), clauses.end());
    clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
    std::vector<std::vector<int>> kept;
    for (size_t i = 0; i < clauses.size(); ++i) {
        bool absorbed = false;
        for (size_t j = 0; j < clauses.size() && !absorbed; ++j) {
            if (i == j) continue;
            if (clauses[j].size() > clauses[i].size()) continue;
            if (clauses[j].size() == clauses[i].size() && j > i) continue;
            if (std::includes(clauses[i].begin(), clauses[i].end(), clauses[j].begin(),
                              clauses[j].end()))
                absorbed = true;
        }
        if (!absorbed) kept.push_back(clauses[i]);
    }
    return kept;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
}

}  // namespace

Decision leq(const LatticeTerm& s, const LatticeTerm& t, const EntailmentOracle& o,
             long cnf_cap) {
    auto cnf = to_cnf(t, cnf_cap);
    if (!cnf)
        return Decision::unknown(cnf_cap, {{"reason", "cnf clause cap exceeded"}});
    bool any_unknown = false;
    long limiting = 0;
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& m : s.meets) {
        for (const auto& clause : *cnf) {
            if (intersects(m, clause)) {
                pairs.push_back({{"lhs", m}, {"rhs", clause}, {"discharge", "syntactic"}});
                continue;
            }
            Decision d = o.decide(m, clause);
            pairs.push_back({{"lhs", m},
                             {"rhs", clause},
                             {"status", to_string(d.status)},
                             {"evidence", d.evidence}});
            if (d.status == Tri::Refuted)
                return Decision::refuted({{"pairs", pairs}});
            if (d.status == Tri::Unknown) {
                any_unknown = true;
                limiting = std::max(limiting, d.bound);
            }
        }
    }
    if (any_unknown) return Decision::unknown(limiting, {{"pairs", pairs}});
    return Decision::proved({{"pairs", pairs}});
}

int EntailmentTable::atom_index(const std::string& name) const {
    for (size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == name) return static_cast<int>(i);
    return -1;
}

TableOracle::TableOracle(EntailmentTable table, long node_cap)
    : table_(std::move(table)), node_cap_(node_cap) {
    int n = static_cast<int>(table_.atoms.size());
    for (const auto& [lhs, rhs] : table_.sequents) {
        for (int a : lhs)
            if (a < 0 || a >= n) throw std::invalid_argument("sequent references unknown atom");
        for (int a : rhs)
            if (a < 0 || a >= n) throw std::invalid_argument("sequent references unknown atom");
    }
}

std::string TableOracle::atom_name(int id) const {
    if (id < 0 || id >= static_cast<int>(table_.atoms.size()))
        throw std::invalid_argument("atom id out of range");
    return table_.atoms[id];
}

namespace {

enum class BranchOutcome { Closed, Countermodel, CapHit };

struct TableSearch {
    const EntailmentTable& table;
    const std::vector<int>& goal;
    long budget;
    std::set<int> countermodel;

    BranchOutcome run(std::set<int> truths) {
        while (true) {
            if (--budget < 0) return BranchOutcome::CapHit;
            for (int b : goal)
                if (truths.count(b)) return BranchOutcome::Closed;
            const std::pair<std::vector<int>, std::vector<int>>* applicable = nullptr;
            for (const auto& seq : table.sequents) {
                bool lhs_holds = true;
                for (int a : seq.first)
                    if (!truths.count(a)) lhs_holds = false;
                if (!lhs_holds) continue;
                bool rhs_holds = false;
                for (int b : seq.second)
                    if (truths.count(b)) rhs_holds = true;
                if (rhs_holds) continue;
                applicable = &seq;
                break;
            }
            if (!applicable) {
                countermodel = std::move(truths);
                return BranchOutcome::Countermodel;
            }
            if (applicable->second.empty()) return BranchOutcome::Closed;
            // case split on the right-hand side
            for (size_t i = 0; i + 1 < applicable->second.size(); ++i) {
                std::set<int> branch = truths;
                branch.insert(applicable->second[i]);
                BranchOutcome r = run(std::move(branch));
                if (r != BranchOutcome::Closed) return r;
            }
            truths.insert(applicable->second.back());
        }
    }
};

}  // namespace

Decision TableOracle::decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const {
    TableSearch search{table_, rhs, node_cap_, {}};
    BranchOutcome r = search.run(std::set<int>(lhs.begin(), lhs.end()));
    switch (r) {
        case BranchOutcome::Closed: return Decision::proved({{"method", "saturation"}});
        case BranchOutcome::Countermodel: {
            std::vector<int> model(search.countermodel.begin(), search.countermodel.end());
            return Decision::refuted({{"countermodel", model}});
        }
        default: return Decision::unknown(node_cap_, {{"reason", "split node cap exceeded"}});
    }
}

bool brute_force_models(const EntailmentTable& t, const std::vector<int>& lhs,
                        const std::vector<int>& rhs) {
    int n = static_cast<int>(t.atoms.size());
    if (n > 20) throw std::invalid_argument("brute force limited to 20 atoms");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        auto truth = [&](int a) { return (mask >> a) & 1ul; };
        bool table_ok = true;
        for (const auto& [sl, sr] : t.sequents) {
            bool l = true, r = false;
            for (int a : sl) l = l && truth(a);
            for (int b : sr) r = r || truth(b);
            if (l && !r) {
                table_ok = false;
                break;
            }
        }
        if (!table_ok) continue;
        bool l = true, r = false;
        for (int a : lhs) l = l && truth(a);
        for (int b : rhs) r = r || truth(b);
        if (l && !r) return false;
    }
    return true;
}

ChainCheckResult check_complementary(const std::vector<int>& xs,
                                     const std::vector<LatticeTerm>& us,
                                     const EntailmentOracle& o) {
    if (xs.empty() || xs.size() != us.size())
        throw std::invalid_argument("chain length mismatch");
    size_t n = xs.size() - 1;
    ChainCheckResult result;
    result.status = Tri::Proved;
    auto record = [&](Decision d) {
        if (d.status == Tri::Refuted)
            result.status = Tri::Refuted;
        else if (d.status == Tri::Unknown && result.status == Tri::Proved)
            result.status = Tri::Unknown;
        result.steps.push_back(std::move(d));
    };
    record(leq(LatticeTerm::top(), join(LatticeTerm::atom(xs[0]), us[0]), o));
    for (size_t k = 0; k < n; ++k)
        record(leq(meet(LatticeTerm::atom(xs[k]), us[k]),
                   join(LatticeTerm::atom(xs[k + 1]), us[k + 1]), o));
    record(leq(meet(LatticeTerm::atom(xs[n]), us[n]), LatticeTerm::bottom(), o));
    return result;
}

std::vector<TupleChainResult> kdim_leq_on_tuples(const std::vector<std::vector<int>>& tuples,
                                                 const ChainSearcher& searcher,
                                                 const EntailmentOracle& o) {
    std::vector<TupleChainResult> results;
    for (const auto& tuple : tuples) {
        TupleChainResult r;
        r.tuple = tuple;
        auto us = searcher(tuple, o);
        if (!us) {
            r.exhausted = true;
        } else {
            r.us = us;
            r.check = check_complementary(tuple, *us, o);
        }
        results.push_back(std::move(r));
    }
    return results;
}

ChainSearcher exhaustive_term_searcher(int max_meet_width) {
    return [max_meet_width](const std::vector<int>& tuple,
                            const EntailmentOracle& o) -> std::optional<std::vector<LatticeTerm>> {
        int n_atoms = o.atom_count();
        if (n_atoms < 0) throw std::invalid_argument("exhaustive search needs enumerable atoms");
        std::vector<LatticeTerm> candidates = {LatticeTerm::bottom(), LatticeTerm::top()};
        std::vector<int> subset;
        std::function<void(int)> gen = [&](int start) {
            if (!subset.empty()) candidates.push_back(LatticeTerm::meet_of(subset));
            if (static_cast<int>(subset.size()) == max_meet_width) return;
            for (int a = start; a < n_atoms; ++a) {
                subset.push_back(a);
                gen(a + 1);
                subset.pop_back();
            }
        };
        gen(0);
        size_t slots = tuple.size();
        std::vector<size_t> idx(slots, 0);
        while (true) {
            std::vector<LatticeTerm> us;
            for (size_t i = 0; i < slots; ++i) us.push_back(candidates[idx[i]]);
            if (check_complementary(tuple, us, o).status == Tri::Proved) return us;
            size_t i = 0;
            while (i < slots && idx[i] + 1 == candidates.size()) idx[i++] = 0;
            if (i == slots) return std::nullopt;
            ++idx[i];
        }
    };
}

}  // namespace valdim
