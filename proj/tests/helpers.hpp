#pragma once

#include <random>
#include <string>
#include <vector>

#include "valdim/parse.hpp"
#include "valdim/poly.hpp"
#include "valdim/ring.hpp"

namespace valdim::testing {

inline Poly qp(const std::string& text, const std::vector<std::string>& vars,
               bool laurent = false) {
    return parse_poly(text, Field::rationals(), vars, laurent);
}

inline RingPtr qring(const std::vector<std::string>& vars,
                     const std::vector<std::string>& gens, bool assume_reduced = false,
                     bool assume_integral = false) {
    std::vector<Poly> ideal;
    for (const auto& g : gens) ideal.push_back(qp(g, vars));
    return RingPresentation::make(Field::rationals(), vars, std::move(ideal), assume_reduced,
                                  assume_integral);
}

inline RingElement elem(const RingPtr& ring, const std::string& text) {
    return RingElement::from_poly(ring, parse_poly(text, ring->field, ring->vars, false));
}

inline Poly random_poly(std::mt19937& rng, const Field& field, int nvars, int max_deg,
                        int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    Poly p = Poly::zero(field, nvars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        ExpVec e(nvars, 0);
        int budget = std::uniform_int_distribution<int>(0, max_deg)(rng);
        for (int i = 0; i < nvars && budget > 0; ++i) {
            e[i] = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= e[i];
        }
        p.insert_term(e, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace valdim::testing
