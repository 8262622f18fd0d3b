#pragma once

#include <map>
#include <string>
#include <vector>

#include "valdim/scalar.hpp"

namespace valdim {

/// Exponent vector of a monomial; entries may be negative in Laurent contexts.
using ExpVec = std::vector<int>;

long total_degree(const ExpVec& e);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
bool exp_leq(const ExpVec& a, const ExpVec& b);  // componentwise
bool exp_nonneg(const ExpVec& a);

/// Sparse exact multivariate polynomial. Terms map exponent vectors to
/// nonzero field coefficients; the map never holds zero coefficients.
struct Poly {
    Field field;
    int nvars = 0;
    bool laurent = false;
    std::map<ExpVec, Rat> terms;

    static Poly zero(const Field& f, int nvars, bool laurent = false);
    static Poly constant(const Field& f, int nvars, const Rat& c, bool laurent = false);
    static Poly variable(const Field& f, int nvars, int i, bool laurent = false);
    static Poly monomial(const Field& f, int nvars, const ExpVec& e, const Rat& c,
                         bool laurent = false);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    /// Constant term value (zero if absent).
    Rat constant_value() const;
    long degree() const;  // max total degree, -1 for zero

    void insert_term(const ExpVec& e, const Rat& c);  // accumulates, drops zeros
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rat& c);
Poly pow(const Poly& a, long k);  // k >= 0
bool equal(const Poly& a, const Poly& b);

/// Extend or reorder variables: maps old variable i to slot[i] in a ring with
/// new_nvars variables.
Poly remap_vars(const Poly& a, int new_nvars, const std::vector<int>& slot);

/// Canonical text form: terms in descending graded-lex variable order,
/// coefficients as integers or p/q fractions.
std::string to_string(const Poly& a, const std::vector<std::string>& vars);

}  // namespace valdim
