#pragma once

#include "valdim/lattice.hpp"
#include "valdim/ring.hpp"

namespace valdim {

/// Lattice of radicals of finitely generated ideals of R, as an entailment
/// oracle on ring-element atoms: ⋀ũ_i ≤ ⋁ã_j iff ∏u_i ∈ √(I + ⟨a_j…⟩) in the
/// ambient polynomial ring. Membership is decidable, so answers are always
/// Proved or Refuted. Intern all atoms before concurrent decide calls.
class ZariskiOracle : public EntailmentOracle {
  public:
    explicit ZariskiOracle(RingPtr ring);

    /// Atom id for D(a); normal-form-equal elements share one id.
    int intern(const RingElement& a);
    const RingElement& atom_element(int id) const;

    Decision decide(const std::vector<int>& lhs, const std::vector<int>& rhs) const override;
    std::string atom_name(int id) const override;
    int atom_count() const override { return static_cast<int>(elems_.size()); }
    const RingPtr& ring() const { return ring_; }

  private:
    RingPtr ring_;
    std::vector<RingElement> elems_;
};

struct JoyalReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks the four generating-relation families of the Zariski lattice —
/// D(0) = 0, D(1) = 1, D(x+y) ≤ D(x) ∨ D(y), D(xy) = D(x) ∧ D(y) — over all
/// pairs from the sample list.
JoyalReport joyal_relations_check(const RingPtr& ring, const std::vector<RingElement>& samples);

}  // namespace valdim
