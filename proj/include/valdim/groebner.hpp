#pragma once

#include <optional>
#include <vector>

#include "valdim/order.hpp"
#include "valdim/poly.hpp"

namespace valdim {

/// Reduced Gröbner basis: monic generators, auto-reduced, sorted ascending by
/// leading monomial. Unique for a given (ideal, order), hence byte-stable.
struct GroebnerBasis {
    Field field;
    int nvars = 0;
    OrderSpec order;
    std::vector<Poly> gens;

    bool trivial() const;  // basis contains 1
};

GroebnerBasis buchberger(const Field& field, int nvars, const std::vector<Poly>& gens,
                         const OrderSpec& order);

/// Remainder of full multivariate division by the basis; zero iff ideal member.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);
bool ideal_member(const Poly& f, const GroebnerBasis& gb);

/// Order placing the flagged variables above all others (indicator row, then a
/// graded block); constructed directly because its first row is intentionally
/// not all-positive and OrderSpec::validate would reject it.
OrderSpec elimination_order(int nvars, const std::vector<bool>& eliminate);

/// Generators of the ideal restricted to the non-flagged variables; results
/// stay in the ambient ring with the flagged variables unused.
std::vector<Poly> eliminate_vars(const Field& field, int nvars, const std::vector<Poly>& gens,
                                 const std::vector<bool>& eliminate);

/// Canonical generators (reduced grlex basis) for the ideal operations below.
std::vector<Poly> canonical_gens(const Field& field, int nvars, const std::vector<Poly>& gens);

std::vector<Poly> ideal_intersect(const Field& field, int nvars, const std::vector<Poly>& a,
                                  const std::vector<Poly>& b);
std::vector<Poly> ideal_product(const Field& field, int nvars, const std::vector<Poly>& a,
                                const std::vector<Poly>& b);
/// (I : f) = {g : g·f ∈ I}, via intersection with ⟨f⟩ then exact division.
std::vector<Poly> ideal_quotient(const Field& field, int nvars, const std::vector<Poly>& ideal,
                                 const Poly& f);
/// (I : J) = ∩_j (I : f_j) over the given generators of J.
std::vector<Poly> ideal_quotient_ideal(const Field& field, int nvars,
                                       const std::vector<Poly>& ideal,
                                       const std::vector<Poly>& j_gens);
/// (I : f^∞) by eliminating t from I + ⟨1 − t·f⟩; requires f ≠ 0.
std::vector<Poly> saturation(const Field& field, int nvars, const std::vector<Poly>& ideal,
                             const Poly& f);

/// f ∈ √I, decided by 1 ∈ I + ⟨1 − t·f⟩ with t fresh.
bool radical_member(const Poly& f, const Field& field, int nvars, const std::vector<Poly>& ideal);

/// Least m with f^m ∈ I; caller asserts f ∈ √I, the cap guards against misuse.
long radical_exponent(const Poly& f, const GroebnerBasis& gb, long cap = 1000);

/// Quotient g/f when the division is exact, otherwise nullopt.
std::optional<Poly> divide_exact(const Poly& g, const Poly& f);

}  // namespace valdim
