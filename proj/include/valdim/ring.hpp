#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "valdim/groebner.hpp"

namespace valdim {

/// Finitely presented algebra field[vars]/⟨ideal_gens⟩. The reduction flags are
/// caller assertions: recorded, not proven; operations whose contracts need
/// them refuse to run when absent. Immutable; the internal Gröbner basis
/// (grlex over the declared variables) is write-once memoized.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
  public:
    Field field;
    std::vector<std::string> vars;
    std::vector<Poly> ideal_gens;
    bool assume_reduced = false;
    bool assume_integral = false;

    static std::shared_ptr<const RingPresentation> make(Field field,
                                                        std::vector<std::string> vars,
                                                        std::vector<Poly> ideal_gens,
                                                        bool assume_reduced = false,
                                                        bool assume_integral = false);

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;  // -1 when absent
    const GroebnerBasis& basis() const;
    bool is_trivial() const;  // 1 ∈ ideal

  private:
    RingPresentation() = default;
    mutable std::once_flag basis_once_;
    mutable std::optional<GroebnerBasis> basis_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Element of a presented ring, stored as the Gröbner normal form of a
/// representative; equality of elements is equality of stored polynomials.
struct RingElement {
    RingPtr ring;
    Poly repr;

    static RingElement from_poly(const RingPtr& ring, const Poly& p);
    static RingElement zero(const RingPtr& ring);
    static RingElement one(const RingPtr& ring);
    static RingElement constant(const RingPtr& ring, const Rat& c);
    static RingElement variable(const RingPtr& ring, int i);

    bool is_zero() const { return repr.is_zero(); }
    std::string to_string() const;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement scale(const RingElement& a, const Rat& c);
RingElement pow(const RingElement& a, long k);
bool equal(const RingElement& a, const RingElement& b);
void require_same_ring(const RingElement& a, const RingElement& b);

/// num/den over a presented ring; meaningful as a fraction-field element only
/// under assume_integral. Denominators are kept grlex-monic; equality is
/// decided by cross-multiplication.
struct FracElement {
    RingElement num;
    RingElement den;

    static FracElement of(const RingElement& num, const RingElement& den);
    static FracElement whole(const RingElement& a);

    bool is_zero() const { return num.is_zero(); }
    bool is_whole() const;  // den = 1
    std::string to_string() const;
};

FracElement add(const FracElement& a, const FracElement& b);
FracElement sub(const FracElement& a, const FracElement& b);
FracElement neg(const FracElement& a);
FracElement mul(const FracElement& a, const FracElement& b);
FracElement div(const FracElement& a, const FracElement& b);
FracElement inverse(const FracElement& a);
FracElement pow(const FracElement& a, long k);  // any integer sign
bool equal(const FracElement& a, const FracElement& b);

}  // namespace valdim
