#pragma once

#include <map>
#include <string>
#include <vector>

#include "valdim/order.hpp"
#include "valdim/ring.hpp"

namespace valdim {

/// Polynomial in fresh indicator variables X_0..X_{nind-1} whose coefficients
/// are elements of a presented ring (stored as normal-form polynomials).
/// Indicator exponents may be negative when laurent is set; ring-coefficient
/// polynomials are always ordinary.
struct RPoly {
    RingPtr ring;
    int nind = 0;
    bool laurent = false;
    std::map<ExpVec, Poly> terms;

    static RPoly zero(const RingPtr& ring, int nind, bool laurent = false);
    static RPoly from_coeff(const RingElement& c, int nind, bool laurent = false);
    static RPoly constant(const RingPtr& ring, int nind, const Rat& c, bool laurent = false);
    static RPoly indicator(const RingPtr& ring, int nind, int i, bool laurent = false);
    static RPoly monomial(const RingPtr& ring, int nind, const ExpVec& e, const RingElement& c,
                          bool laurent = false);

    bool is_zero() const { return terms.empty(); }
    RingElement coeff(const ExpVec& e) const;  // zero element when absent
    void insert_term(const ExpVec& e, const Poly& coeff_repr);  // accumulates mod the ideal

    /// Extremes of indicator i's exponent over the support; requires nonempty.
    int min_exp(int i) const;
    int max_exp(int i) const;
};

RPoly add(const RPoly& a, const RPoly& b);
RPoly sub(const RPoly& a, const RPoly& b);
RPoly neg(const RPoly& a);
RPoly mul(const RPoly& a, const RPoly& b);
RPoly mul_coeff(const RPoly& a, const RingElement& c);
RPoly pow(const RPoly& a, long k);
bool equal(const RPoly& a, const RPoly& b);

/// Multiply by the indicator monomial X^m; a negative entry switches the
/// result to laurent.
RPoly shift(const RPoly& a, const ExpVec& m);

/// Minimum/maximum support monomial under the order, with its coefficient.
std::pair<ExpVec, RingElement> trailing_term(const RPoly& p, const OrderSpec& o);
std::pair<ExpVec, RingElement> leading_term(const RPoly& p, const OrderSpec& o);

/// Substitution homomorphism X_i ↦ points[i]; plain ring points require
/// nonnegative exponents, fraction points allow negative ones when invertible.
RingElement evaluate(const RPoly& p, const std::vector<RingElement>& points);
FracElement evaluate(const RPoly& p, const std::vector<FracElement>& points);

std::string to_string(const RPoly& p, const std::vector<std::string>& indicator_names);

}  // namespace valdim
