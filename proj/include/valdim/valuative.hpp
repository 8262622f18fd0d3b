#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valdim/dimcert.hpp"
#include "valdim/lattice.hpp"

namespace valdim {

enum class ValCertForm { Vprime, Vr };

/// Certificate for V′(y_1),…,V′(y_m) ⊢ V′(x_1),…,V′(x_n) over an integral
/// presentation: the identity
///   y_1^{p_1}⋯y_m^{p_m} = Σ_j x_j·P_j(x, y)          (Vprime)
///   y_1^{p_1}⋯y_m^{p_m} = Q(x, y)                    (Vr)
/// in the fraction field, where the P_j / Q have ring coefficients,
/// indicators X_0..X_{n-1} stand for the right atoms and X_n..X_{n+m-1} for
/// the left atoms, every left multiexponent is ≤ p componentwise (Vprime)
/// or strictly below p (Vr), and checking clears denominators and reduces
/// to normal form 0.
struct ValCert {
    ValCertForm form = ValCertForm::Vprime;
    std::vector<FracElement> left;
    std::vector<long> exponents;  // p_i ≥ 0, one per left atom
    std::vector<FracElement> right;
    std::vector<RPoly> polys;  // Vprime: one per right atom; Vr: exactly one
};

/// Shape, exponent-bound, and identity check. Requires assume_integral on
/// the ring. Never throws on a merely false certificate.
VerifyReport verify_val_cert(const ValCert& c, const RingPtr& ring);

struct ValSearchOutcome {
    std::optional<ValCert> cert;
    long p_bound = 0;
    long deg_bound = 0;
    long coeff_degree_bound = 0;
};

/// Bounded search for a Vprime certificate: left exponent vectors ascending
/// by (total, lex) up to p_bound, unknown coefficients of the P_j ranging
/// over indicator monomials of total degree ≤ deg_bound in the right atoms,
/// ≤ p componentwise in the left atoms, times standard ring monomials of
/// degree ≤ coeff_degree_bound (default deg_bound). Denominators are cleared
/// once and the resulting linear system is solved exactly; any hit is
/// re-verified before being returned. A zero left atom short-circuits to the
/// all-zero certificate.
ValSearchOutcome search_val_cert(const RingPtr& ring, const std::vector<FracElement>& left,
                                 const std::vector<FracElement>& right, long p_bound,
                                 long deg_bound, long coeff_degree_bound = -1);

/// Entailment oracle on V′-atoms (fraction-field elements, interned up to
/// equality) backed by search_val_cert, plus a registry of pre-built
/// certificates consulted first. Answers are Proved or Unknown, never
/// Refuted.
class ValuativeOracle : public EntailmentOracle {
  public:
    explicit ValuativeOracle(RingPtr ring, long p_bound = 4, long deg_bound = 6,
                             long coeff_degree_bound = -1);

    int intern(const FracElement& v);
    const FracElement& atom_value(int id) const;

    /// Registers a certificate for the sequent {lhs} ⊢ {rhs}; verified on
    /// registration (throws std::invalid_argument on a bad certificate).
    void add_hint(std::vector<int> lhs, std::vector<int> rhs, ValCert cert);

    Decision decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const override;
    std::string atom_name(int id) const override;
    int atom_count() const override { return static_cast<int>(atoms_.size()); }

    const RingPtr& ring() const { return ring_; }

  private:
    RingPtr ring_;
    long p_bound_;
    long deg_bound_;
    long coeff_degree_bound_;
    std::vector<FracElement> atoms_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, ValCert> hints_;
};

/// Layered form of a verified lex certificate (last indicator most
/// significant), produced by dividing the witness by its trailing monomial:
///   divided = 1 + X_0·f_0 + Σ_{k=1}^{n-1} (∏_{j<k} X_j^{r_j})·X_k·g_k
///             + (∏_{j≤n-2} X_j^{r_j})·X_n·X_{n-1}^{-r_{n-1}}·g_n,
/// where f_0 is a polynomial in X_0, each g_k (k < n) has nonpositive
/// exponents below indicator k, and g_n additionally has nonnegative
/// exponents in indicator n-1. The r_j are the least nonnegative exponents
/// making this hold.
struct WitnessDecomposition {
    DimCertificate cert;
    RPoly f0;
    std::vector<RPoly> gs;  // g_1..g_n; empty when n = 0
    ExpVec q;               // trailing exponents of the witness
    std::vector<long> rs;   // r_0..r_{n-1}
};

/// Requires a verified certificate under lex order with priority
/// (n, n-1, …, 0). forced_r overrides the minimal exponents; the layer
/// constraints are then checked and std::invalid_argument is thrown when
/// violated.
WitnessDecomposition decompose_witness(const DimCertificate& c,
                                       const std::vector<long>& forced_r = {});

struct ChainStep {
    enum class Kind { ValCert, Syntactic, ZeroAtom };
    Kind kind = Kind::Syntactic;
    std::optional<ValCert> cert;
};

/// Complementary sequence for V′(x_0),…,V′(x_n) in the lattice of V′-atoms,
/// together with per-inequality discharge evidence and the oracle holding
/// the interned atoms and registered certificates.
struct ComplementaryChainV {
    RingPtr ring;
    std::vector<FracElement> xs;
    std::vector<FracElement> ys;
    std::vector<LatticeTerm> us;
    std::vector<int> x_atoms;
    std::shared_ptr<ValuativeOracle> oracle;
    std::vector<ChainStep> steps;  // n+2 entries, one per inequality
    ChainCheckResult check;
};

/// Builds the complementary sequence from a decomposition over an integral
/// presentation with nonzero points:
///   y_0 = (1 + x_0·f_0(x_0))/x_0^{r_0}      (n ≥ 2; for n = 1 the last rule)
///   y_k = (y_{k-1} + x_k·g_k(x))/x_k^{r_k}  (1 ≤ k ≤ n-2)
///   y_{n-1} = x_n/x_{n-1}^{r_{n-1}}
///   u_0 = V′(y_0),  u_k = V′(y_k) ∧ V′(x_{k-1}) ∧ ⋯ ∧ V′(x_0) (k ≤ n-2),
///   u_{n-1} = V′(y_{n-1}),  u_n = ⊥,
/// registering one certificate per inequality; side clauses discharge
/// syntactically. A zero point degrades to the reduced-tuple sequence (top
/// up to the last zero index, bottom after, the crossing step discharged by
/// the zero atom). The assembled sequence is checked and must prove.
ComplementaryChainV build_chain(const WitnessDecomposition& d, long p_bound = 4,
                                long deg_bound = 6);

struct VdimToVdimOutcome {
    RingPtr subring;
    SearchOutcome search;
    std::optional<WitnessDecomposition> decomposition;
    std::optional<ComplementaryChainV> chain;
};

/// Presents R[x_0..x_n] ⊆ Frac R by adjoining T_i with relations
/// den_i·T_i − num_i, saturated by ∏den_i (mandatory: fraction identities
/// must reduce to 0), searches for a dimension certificate under lex with
/// the last indicator most significant and coefficients restricted to the
/// original variables, decomposes the witness, and builds the checked
/// complementary sequence. chain is absent when the search finds nothing
/// within the bound.
VdimToVdimOutcome vdim_to_Vdim(const RingPtr& ring, const std::vector<FracElement>& xs,
                               long degree_bound, long coeff_degree_bound = -1,
                               long p_bound = 4, long val_deg_bound = 6);

}  // namespace valdim
