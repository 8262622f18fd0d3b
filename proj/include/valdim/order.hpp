#pragma once

#include <utility>
#include <vector>

#include "valdim/poly.hpp"

namespace valdim {

enum class Cmp { Less, Equal, Greater };

/// A monomial order on Z^n: either lexicographic via a priority permutation
/// (most significant variable first), or defined by an integer matrix M with
/// positive first row and nonzero determinant, comparing M*e to M*f
/// lexicographically. Graded means the first row of M is all ones.
struct OrderSpec {
    enum class Kind { Lex, Matrix };
    Kind kind = Kind::Lex;
    std::vector<int> priority;            // Lex: permutation, most significant first
    std::vector<std::vector<long>> rows;  // Matrix: square, nonnegative entries

    int dim() const;
    bool graded() const;
    void validate() const;  // throws std::invalid_argument on a malformed spec

    static OrderSpec lex(std::vector<int> priority);
    static OrderSpec matrix(std::vector<std::vector<long>> rows);
    static OrderSpec grlex(int n);
};

Cmp compare(const ExpVec& e, const ExpVec& f, const OrderSpec& o);

/// Minimum/maximum term of a nonzero polynomial under the order.
std::pair<ExpVec, Rat> trailing_term(const Poly& p, const OrderSpec& o);
std::pair<ExpVec, Rat> leading_term(const Poly& p, const OrderSpec& o);

/// Every monomial of N^nvars with total degree ≤ degree_bound, sorted
/// ascending under the order; each visited exactly once.
std::vector<ExpVec> ascending_monomials(int nvars, long degree_bound, const OrderSpec& o);

}  // namespace valdim
