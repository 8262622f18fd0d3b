#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valdim/rpoly.hpp"

namespace valdim {

/// Dimension certificate in trailing-coefficient form: a polynomial in
/// indicators X_0..X_n, with coefficients in the ring, that vanishes at the
/// points and whose minimum term under the order has coefficient 1.
struct DimCertificate {
    RingPtr ring;
    std::vector<RingElement> points;
    OrderSpec order;
    RPoly witness;
    ExpVec trailing;
};

struct VerifyReport {
    bool ok = false;
    std::string diagnostic;
};

/// Checks trailing-minimality, trailing coefficient = 1, and vanishing at the
/// points. Over the trivial ring every shape-valid certificate holds (the
/// class of 1 is 0: dimension -1 convention). Throws on a zero witness over a
/// nontrivial ring.
VerifyReport verify_dim_cert(const DimCertificate& c);

/// Nested-collapse data: the identity
///   0 = x_0^{e_0}(x_1^{e_1}(⋯(x_n^{e_n}(1 + c_n x_n) + c_{n-1}x_{n-1})⋯) + c_0 x_0)
/// expanded into a certificate whose lex trailing monomial is ∏X_i^{e_i}
/// (lex priority X_0 most significant).
struct NestedCollapse {
    RingPtr ring;
    std::vector<RingElement> points;
    std::vector<int> exponents;
    std::vector<RingElement> cofactors;
};

DimCertificate expand_nested(const NestedCollapse& nc);

struct SearchOutcome {
    std::optional<DimCertificate> cert;
    long degree_bound = 0;
    long coeff_degree_bound = 0;
    long candidates_tried = 0;
};

/// Standard ring monomials (equal to their own normal form) over the
/// unmasked variables, total degree ≤ bound, ascending by degree then lex.
std::vector<Poly> coefficient_monomials(const RingPtr& ring, long bound,
                                        const std::vector<bool>& var_mask = {});

/// Bounded certificate search: candidate trailing monomials ascending under
/// the order up to degree_bound; remaining support coefficients are unknowns
/// over the field times ring monomials of degree ≤ coeff_degree_bound
/// (default: degree_bound); the first reduced-echelon solution in enumeration
/// order wins. coeff_var_mask restricts which ring variables may appear in
/// the unknown coefficients (empty = all).
SearchOutcome search_dim_cert(const RingPtr& ring, const std::vector<RingElement>& points,
                              const OrderSpec& order, long degree_bound,
                              long coeff_degree_bound = -1,
                              const std::vector<bool>& coeff_var_mask = {});

/// Transports a certificate over a quotient presentation sharing target's
/// variables back to target, forces the trailing coefficient to the literal 1
/// (any representative differs from it by something in target's nilradical),
/// and raises the witness to the given power. Requires the transported
/// witness's evaluation to the given exponent to be 0 in target.
DimCertificate lift_from_reduced(const DimCertificate& c, const RingPtr& target,
                                 long nilpotency_exponent);

/// Combines two certificates over the same ring/points/order whose defects
/// are mutually orthogonal: with y_i = trailing coefficient − 1 and
/// z_i = evaluation of witness i, requires y1y2 = y1z2 = z1y2 = z1z2 = 0.
/// Trailing monomials are aligned to their lcm, then Q_1 = P_1 − y_1·P_2,
/// Q_2 = P_2 − y_2·P_1 are multiplied; the result verifies over the ring.
DimCertificate glue_components(const DimCertificate& c1, const DimCertificate& c2);

struct TupleSearchReport {
    std::vector<RingElement> points;
    SearchOutcome outcome;
};

struct SampledReport {
    bool all_found = false;
    long degree_bound = 0;
    std::string verdict;
    std::vector<TupleSearchReport> tuples;
};

/// Runs the certificate search on each supplied tuple; the verdict only ever
/// claims consistency at the bound (the universally quantified statement is
/// not decidable from samples).
SampledReport dimv_leq_sampled(const RingPtr& ring, int n,
                               const std::vector<std::vector<RingElement>>& tuples,
                               const OrderSpec& order, long degree_bound,
                               long coeff_degree_bound = -1);

/// R[Y_1..Y_n] as a presentation: same ideal, n fresh variable names.
RingPtr polynomial_extension(const RingPtr& ring, int n, const std::string& prefix = "Y");

/// The 2n-dimensional bound behind "vdim ≤ n": Kdim R[Y_1..Y_n] ≤ 2n, sampled
/// on caller-supplied (2n+1)-tuples over the extension, searched under lex
/// with the last indicator most significant.
SampledReport vdim_leq_sampled(const RingPtr& extended_ring, int n,
                               const std::vector<std::vector<RingElement>>& tuples,
                               long degree_bound, long coeff_degree_bound = -1);

struct OrderIndependenceReport {
    bool first_found = false;
    bool second_found = false;
    bool agree = false;
    bool escalated = false;
    long second_bound = 0;
    std::optional<DimCertificate> second_cert;
};

/// Re-runs the search for a certificate's points under another graded order,
/// escalating once to twice the bound before reporting disagreement.
OrderIndependenceReport order_independence(const DimCertificate& c, const OrderSpec& o2,
                                           long degree_bound, long coeff_degree_bound = -1);

}  // namespace valdim
