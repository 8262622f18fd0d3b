#pragma once

#include "valdim/dimcert.hpp"

namespace valdim {

/// Ann_R(a) pulled back to the ambient polynomial ring, as canonical
/// generators (they contain the defining ideal).
std::vector<Poly> annihilator(const RingPtr& ring, const RingElement& a);

/// One factor of a splitting, tagged with the indices of the split elements
/// that become zero in it.
struct SplitComponent {
    RingPtr ring;
    std::vector<int> zero_set;
};

struct ComponentSplit {
    RingPtr parent;
    std::vector<SplitComponent> components;
};

/// R → R/a^⊥ × R/a^⊥⊥: a is regular in the first factor and zero in the
/// second. Requires assume_reduced; the injectivity of the pairing (the two
/// enlarged ideals intersect in the defining ideal) is checked and a failure
/// reported as a wrong reduction flag.
ComponentSplit split_at(const RingPtr& ring, const RingElement& a);

/// The 2^n-component splitting along a_1..a_n: component S carries the ideal
/// (⟨a_i ; i ∈ S⟩^⊥ · ∏_{j∉S} a_j)^⊥, listed by bitmask with bit i set when
/// a_i is zero in the component. Agrees with iterating split_at in any order;
/// n = 0 yields the single component R. Injectivity is checked as for
/// split_at. Finite stages of the minimal pp-closure are exactly these splits.
ComponentSplit split_sequence(const RingPtr& ring, const std::vector<RingElement>& elems);

enum class ElementClass { Zero, Regular };

/// Classifies each element in each component as zero (lands in the component
/// ideal) or regular (the component ideal quotient by it is itself). An
/// element that is neither signals a wrong assume_reduced flag and throws.
std::vector<std::vector<ElementClass>> regular_split_check(const ComponentSplit& split,
                                                           const std::vector<RingElement>& xs);

/// Certificate driver that answers the zero-or-regular test by splitting:
/// search directly where every point is zero or regular, otherwise split at
/// the first undecided point, recurse on both factors, and glue the two
/// verified factor certificates over the current presentation. Throws when a
/// factor search exhausts the bound.
DimCertificate machinery_no1_dimcert(const RingPtr& ring, const std::vector<RingElement>& points,
                                     const OrderSpec& order, long degree_bound,
                                     long coeff_degree_bound = -1);

}  // namespace valdim
