#include "valdim/ring.hpp"

#include <set>
#include <stdexcept>

namespace valdim {

std::shared_ptr<const RingPresentation> RingPresentation::make(Field field,
                                                               std::vector<std::string> vars,
                                                               std::vector<Poly> ideal_gens,
                                                               bool assume_reduced,
                                                               bool assume_integral) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw std::invalid_argument("duplicate variable names in presentation");
    for (const auto& g : ideal_gens) {
        require_same_field(field, g.field);
        if (g.nvars != static_cast<int>(vars.size()))
            throw std::invalid_argument("ideal generator variable count mismatch");
        for (const auto& [e, c] : g.terms)
            if (!exp_nonneg(e))
                throw std::invalid_argument("Laurent polynomial as ideal generator");
    }
    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->field = field;
    r->vars = std::move(vars);
    r->ideal_gens = std::move(ideal_gens);
    r->assume_reduced = assume_reduced;
    r->assume_integral = assume_integral;
    return r;
}

int RingPresentation::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

const GroebnerBasis& RingPresentation::basis() const {
    std::call_once(basis_once_, [this] {
        if (nvars() == 0) {
            GroebnerBasis gb;
            gb.field = field;
            gb.nvars = 0;
            gb.order = OrderSpec::grlex(1);
            for (const auto& g : ideal_gens)
                if (!g.is_zero()) {
                    gb.gens = {Poly::constant(field, 0, 1)};
                    break;
                }
            basis_ = std::move(gb);
        } else {
            basis_ = buchberger(field, nvars(), ideal_gens, OrderSpec::grlex(nvars()));
        }
    });
    return *basis_;
}

bool RingPresentation::is_trivial() const { return basis().trivial(); }

RingElement RingElement::from_poly(const RingPtr& ring, const Poly& p) {
    require_same_field(ring->field, p.field);
    if (p.nvars != ring->nvars()) throw std::invalid_argument("polynomial/ring variable mismatch");
    for (const auto& [e, c] : p.terms)
        if (!exp_nonneg(e)) throw std::invalid_argument("Laurent polynomial as ring element");
    return RingElement{ring, normal_form(p, ring->basis())};
}

RingElement RingElement::zero(const RingPtr& ring) {
    return RingElement{ring, Poly::zero(ring->field, ring->nvars())};
}

RingElement RingElement::one(const RingPtr& ring) { return constant(ring, 1); }

RingElement RingElement::constant(const RingPtr& ring, const Rat& c) {
    return from_poly(ring, Poly::constant(ring->field, ring->nvars(), c));
}

RingElement RingElement::variable(const RingPtr& ring, int i) {
    return from_poly(ring, Poly::variable(ring->field, ring->nvars(), i));
}

std::string RingElement::to_string() const { return valdim::to_string(repr, ring->vars); }

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring) throw std::invalid_argument("elements of different presentations");
}

RingElement add(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::from_poly(a.ring, add(a.repr, b.repr));
}

RingElement sub(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::from_poly(a.ring, sub(a.repr, b.repr));
}

RingElement neg(const RingElement& a) { return RingElement{a.ring, neg(a.repr)}; }

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::from_poly(a.ring, mul(a.repr, b.repr));
}

RingElement scale(const RingElement& a, const Rat& c) {
    return RingElement::from_poly(a.ring, scale(a.repr, c));
}

RingElement pow(const RingElement& a, long k) {
    if (k < 0) throw std::invalid_argument("negative ring element power");
    RingElement r = RingElement::one(a.ring);
    RingElement base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

bool equal(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return equal(a.repr, b.repr);
}

namespace {

// scale so the denominator is monic under the ring's internal order; over
// the trivial ring every element is zero and zero is a unit, so fractions
// collapse instead of failing
FracElement normalize_frac(RingElement num, RingElement den) {
    if (num.ring->is_trivial()) return FracElement{num, RingElement::one(num.ring)};
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (num.is_zero()) return FracElement{num, RingElement::one(num.ring)};
    Rat lc = leading_term(den.repr, OrderSpec::grlex(std::max(den.ring->nvars(), 1))).second;
    Rat inv = den.ring->field.inv(lc);
    return FracElement{scale(num, inv), scale(den, inv)};
}

}  // namespace

FracElement FracElement::of(const RingElement& num, const RingElement& den) {
    require_same_ring(num, den);
    return normalize_frac(num, den);
}

FracElement FracElement::whole(const RingElement& a) {
    return FracElement{a, RingElement::one(a.ring)};
}

bool FracElement::is_whole() const { return equal(den, RingElement::one(den.ring)); }

std::string FracElement::to_string() const {
    if (is_whole()) return num.to_string();
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

FracElement add(const FracElement& a, const FracElement& b) {
    return normalize_frac(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

FracElement sub(const FracElement& a, const FracElement& b) {
    return normalize_frac(sub(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

FracElement neg(const FracElement& a) { return FracElement{neg(a.num), a.den}; }

FracElement mul(const FracElement& a, const FracElement& b) {
    return normalize_frac(mul(a.num, b.num), mul(a.den, b.den));
}

FracElement div(const FracElement& a, const FracElement& b) { return mul(a, inverse(b)); }

FracElement inverse(const FracElement& a) {
    if (a.num.ring->is_trivial()) return a;
    if (a.num.is_zero()) throw std::invalid_argument("inverse of zero fraction");
    return normalize_frac(a.den, a.num);
}

FracElement pow(const FracElement& a, long k) {
    if (k < 0) return pow(inverse(a), -k);
    FracElement r = FracElement::whole(RingElement::one(a.num.ring));
    FracElement base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

bool equal(const FracElement& a, const FracElement& b) {
    return equal(mul(a.num, b.den), mul(b.num, a.den));
}

}  // namespace valdim
