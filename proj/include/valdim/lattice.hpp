#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace valdim {

enum class Tri { Proved, Refuted, Unknown };

std::string to_string(Tri t);

/// Answer of an entailment oracle, with oracle-specific serializable evidence
/// and, for Unknown, the bound that limited the search.
struct Decision {
    Tri status = Tri::Unknown;
    nlohmann::json evidence = nlohmann::json::object();
    long bound = 0;

    static Decision proved(nlohmann::json ev = nlohmann::json::object());
    static Decision refuted(nlohmann::json ev = nlohmann::json::object());
    static Decision unknown(long bound, nlohmann::json ev = nlohmann::json::object());
};

/// Element of the lattice generated by opaque atoms, kept in canonical DNF:
/// a join of meets, each meet a sorted atom set, the family an antichain
/// under inclusion. Empty join = bottom; the single empty meet = top.
struct LatticeTerm {
    std::vector<std::vector<int>> meets;

    static LatticeTerm bottom();
    static LatticeTerm top();
    static LatticeTerm atom(int id);
    static LatticeTerm meet_of(std::vector<int> atoms);

    bool is_bottom() const { return meets.empty(); }
    bool is_top() const { return meets.size() == 1 && meets.front().empty(); }
    void canonicalize();
};

LatticeTerm meet(const LatticeTerm& a, const LatticeTerm& b);
LatticeTerm join(const LatticeTerm& a, const LatticeTerm& b);
bool term_equal(const LatticeTerm& a, const LatticeTerm& b);
std::string term_to_string(const LatticeTerm& t, const std::function<std::string(int)>& name);

/// Entailment relation A ⊢ B on finite atom sets, tri-state: bounded-search
/// oracles answer Unknown instead of Refuted. decide must be reflexive,
/// monotone, and respect cut — checked by tests, not enforced here.
class EntailmentOracle {
  public:
    virtual ~EntailmentOracle() = default;
    virtual Decision decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const = 0;
    virtual std::string atom_name(int id) const = 0;
    /// Number of interned atoms, or -1 when the domain is not enumerable.
    virtual int atom_count() const { return -1; }
};

/// s ≤ t in the generated lattice: s's DNF meets against t's CNF clauses,
/// one oracle query per pair. Pairs sharing an atom discharge syntactically.
/// CNF conversion is capped; beyond the cap the answer is Unknown.
Decision leq(const LatticeTerm& s, const LatticeTerm& t, const EntailmentOracle& o,
             long cnf_cap = 4096);

/// Finite presentation: named atoms plus sequents lhs ⊢ rhs (atom id lists).
struct EntailmentTable {
    std::vector<std::string> atoms;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> sequents;

    int atom_index(const std::string& name) const;  // -1 when absent
};

/// Decision procedure for table-presented lattices: forward chaining with
/// case splits on sequent right-hand sides; complete, so Refuted answers are
/// genuine and carry a two-valued countermodel. node_cap bounds the split
/// tree; beyond it the answer degrades to Unknown.
class TableOracle : public EntailmentOracle {
  public:
    explicit TableOracle(EntailmentTable table, long node_cap = 100000);
    Decision decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const override;
    std::string atom_name(int id) const override;
    int atom_count() const override { return static_cast<int>(table_.atoms.size()); }
    const EntailmentTable& table() const { return table_; }

  private:
    EntailmentTable table_;
    long node_cap_;
};

/// Testing oracle: enumerate all two-valued valuations satisfying the table
/// and check "all of A true implies some of B true". Requires ≤ 20 atoms.
bool brute_force_models(const EntailmentTable& t, const std::vector<int>& lhs,
                        const std::vector<int>& rhs);

/// The n+2 inequalities making us complementary to xs:
///   top ≤ x_0 ∨ u_0;  x_k ∧ u_k ≤ x_{k+1} ∨ u_{k+1};  x_n ∧ u_n ≤ bottom.
struct ChainCheckResult {
    Tri status = Tri::Unknown;
    std::vector<Decision> steps;
};

ChainCheckResult check_complementary(const std::vector<int>& xs,
                                     const std::vector<LatticeTerm>& us,
                                     const EntailmentOracle& o);

/// Strategy producing candidate u-terms for a tuple, or nullopt when its
/// search space is exhausted.
using ChainSearcher = std::function<std::optional<std::vector<LatticeTerm>>(
    const std::vector<int>& tuple, const EntailmentOracle& o)>;

struct TupleChainResult {
    std::vector<int> tuple;
    std::optional<std::vector<LatticeTerm>> us;
    ChainCheckResult check;
    bool exhausted = false;
};

std::vector<TupleChainResult> kdim_leq_on_tuples(const std::vector<std::vector<int>>& tuples,
                                                 const ChainSearcher& searcher,
                                                 const EntailmentOracle& o);

/// Exhaustive searcher over meets of bounded width (plus top and bottom);
/// needs an enumerable atom domain.
ChainSearcher exhaustive_term_searcher(int max_meet_width = 3);

}  // namespace valdim
