#include "valdim/rpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace valdim {

RPoly RPoly::zero(const RingPtr& ring, int nind, bool laurent) {
    RPoly p;
    p.ring = ring;
    p.nind = nind;
    p.laurent = laurent;
    return p;
}

RPoly RPoly::from_coeff(const RingElement& c, int nind, bool laurent) {
    RPoly p = zero(c.ring, nind, laurent);
    if (!c.is_zero()) p.terms.emplace(ExpVec(nind, 0), c.repr);
    return p;
}

RPoly RPoly::constant(const RingPtr& ring, int nind, const Rat& c, bool laurent) {
    return from_coeff(RingElement::constant(ring, c), nind, laurent);
}

RPoly RPoly::indicator(const RingPtr& ring, int nind, int i, bool laurent) {
    if (i < 0 || i >= nind) throw std::invalid_argument("indicator index out of range");
    RPoly p = zero(ring, nind, laurent);
    ExpVec e(nind, 0);
    e[i] = 1;
    p.terms.emplace(e, RingElement::one(ring).repr);
    return p;
}

RPoly RPoly::monomial(const RingPtr& ring, int nind, const ExpVec& e, const RingElement& c,
                      bool laurent) {
    if (static_cast<int>(e.size()) != nind)
        throw std::invalid_argument("indicator exponent length mismatch");
    if (!laurent && !exp_nonneg(e))
        throw std::invalid_argument("negative indicator exponent without laurent");
    if (c.ring != ring) throw std::invalid_argument("coefficient from different ring");
    RPoly p = zero(ring, nind, laurent);
    if (!c.is_zero()) p.terms.emplace(e, c.repr);
    return p;
}

RingElement RPoly::coeff(const ExpVec& e) const {
    auto it = terms.find(e);
    if (it == terms.end()) return RingElement::zero(ring);
    return RingElement{ring, it->second};
}

void RPoly::insert_term(const ExpVec& e, const Poly& coeff_repr) {
    if (static_cast<int>(e.size()) != nind)
        throw std::invalid_argument("indicator exponent length mismatch");
    if (!laurent && !exp_nonneg(e))
        throw std::invalid_argument("negative indicator exponent without laurent");
    Poly nf = normal_form(coeff_repr, ring->basis());
    if (nf.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, std::move(nf));
    } else {
        Poly s = normal_form(add(it->second, nf), ring->basis());
        if (s.is_zero())
            terms.erase(it);
        else
            it->second = std::move(s);
    }
}

int RPoly::min_exp(int i) const {
    if (terms.empty()) throw std::invalid_argument("empty support");
    int m = terms.begin()->first[i];
    for (const auto& [e, c] : terms) m = std::min(m, e[i]);
    return m;
}

int RPoly::max_exp(int i) const {
    if (terms.empty()) throw std::invalid_argument("empty support");
    int m = terms.begin()->first[i];
    for (const auto& [e, c] : terms) m = std::max(m, e[i]);
    return m;
}

namespace {

void check_compatible(const RPoly& a, const RPoly& b) {
    if (a.ring != b.ring) throw std::invalid_argument("indicator polynomials over different rings");
    if (a.nind != b.nind) throw std::invalid_argument("indicator count mismatch");
}

}  // namespace

RPoly add(const RPoly& a, const RPoly& b) {
    check_compatible(a, b);
    RPoly r = a;
    r.laurent = a.laurent || b.laurent;
    for (const auto& [e, c] : b.terms) r.insert_term(e, c);
    return r;
}

RPoly sub(const RPoly& a, const RPoly& b) {
    check_compatible(a, b);
    RPoly r = a;
    r.laurent = a.laurent || b.laurent;
    for (const auto& [e, c] : b.terms) r.insert_term(e, neg(c));
    return r;
}

RPoly neg(const RPoly& a) {
    RPoly r = a;
    for (auto& [e, c] : r.terms) c = neg(c);
    return r;
}

RPoly mul(const RPoly& a, const RPoly& b) {
    check_compatible(a, b);
    RPoly r = RPoly::zero(a.ring, a.nind, a.laurent || b.laurent);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.insert_term(exp_add(ea, eb), mul(ca, cb));
    return r;
}

RPoly mul_coeff(const RPoly& a, const RingElement& c) {
    if (c.ring != a.ring) throw std::invalid_argument("coefficient from different ring");
    RPoly r = RPoly::zero(a.ring, a.nind, a.laurent);
    for (const auto& [e, ac] : a.terms) r.insert_term(e, mul(ac, c.repr));
    return r;
}

RPoly pow(const RPoly& a, long k) {
    if (k < 0) throw std::invalid_argument("negative indicator polynomial power");
    RPoly r = RPoly::constant(a.ring, a.nind, 1, a.laurent);
    RPoly base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

bool equal(const RPoly& a, const RPoly& b) {
    check_compatible(a, b);
    if (a.terms.size() != b.terms.size()) return false;
    auto it = a.terms.begin();
    auto jt = b.terms.begin();
    for (; it != a.terms.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!equal(it->second, jt->second)) return false;
    }
    return true;
}

RPoly shift(const RPoly& a, const ExpVec& m) {
    if (static_cast<int>(m.size()) != a.nind)
        throw std::invalid_argument("shift exponent length mismatch");
    RPoly r = RPoly::zero(a.ring, a.nind, a.laurent || !exp_nonneg(m));
    for (const auto& [e, c] : a.terms) {
        ExpVec ne = exp_add(e, m);
        if (!r.laurent && !exp_nonneg(ne)) r.laurent = true;
        r.terms.emplace(std::move(ne), c);
    }
    return r;
}

namespace {

std::pair<ExpVec, RingElement> extreme(const RPoly& p, const OrderSpec& o, bool want_min) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no extreme term");
    if (o.dim() != p.nind) throw std::invalid_argument("order dimension mismatch");
    const std::pair<const ExpVec, Poly>* best = nullptr;
    for (const auto& t : p.terms) {
        if (!best) {
            best = &t;
            continue;
        }
        Cmp c = compare(t.first, best->first, o);
        if ((want_min && c == Cmp::Less) || (!want_min && c == Cmp::Greater)) best = &t;
    }
    return {best->first, RingElement{p.ring, best->second}};
}

}  // namespace

std::pair<ExpVec, RingElement> trailing_term(const RPoly& p, const OrderSpec& o) {
    return extreme(p, o, true);
}

std::pair<ExpVec, RingElement> leading_term(const RPoly& p, const OrderSpec& o) {
    return extreme(p, o, false);
}

RingElement evaluate(const RPoly& p, const std::vector<RingElement>& points) {
    if (static_cast<int>(points.size()) != p.nind)
        throw std::invalid_argument("point count mismatch");
    for (const auto& pt : points)
        if (pt.ring != p.ring) throw std::invalid_argument("point from different ring");
    RingElement acc = RingElement::zero(p.ring);
    for (const auto& [e, c] : p.terms) {
        if (!exp_nonneg(e))
            throw std::invalid_argument("negative exponent needs fraction points");
        RingElement term{p.ring, c};
        for (int i = 0; i < p.nind; ++i)
            if (e[i] != 0) term = mul(term, pow(points[i], e[i]));
        acc = add(acc, term);
    }
    return acc;
}

FracElement evaluate(const RPoly& p, const std::vector<FracElement>& points) {
    if (static_cast<int>(points.size()) != p.nind)
        throw std::invalid_argument("point count mismatch");
    FracElement acc = FracElement::whole(RingElement::zero(p.ring));
    for (const auto& [e, c] : p.terms) {
        FracElement term = FracElement::whole(RingElement{p.ring, c});
        for (int i = 0; i < p.nind; ++i)
            if (e[i] != 0) term = mul(term, pow(points[i], e[i]));
        acc = add(acc, term);
    }
    return acc;
}

std::string to_string(const RPoly& p, const std::vector<std::string>& indicator_names) {
    if (static_cast<int>(indicator_names.size()) != p.nind)
        throw std::invalid_argument("indicator name list length mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto& [e, c] : p.terms) {
        if (!first_term) out << " + ";
        first_term = false;
        bool has_ind = false;
        for (int x : e)
            if (x != 0) has_ind = true;
        std::string cs = valdim::to_string(c, p.ring->vars);
        bool printed_factor = false;
        if (!has_ind || cs != "1") {
            out << "(" << cs << ")";
            printed_factor = true;
        }
        for (int i = 0; i < p.nind; ++i) {
            if (e[i] == 0) continue;
            if (printed_factor) out << "*";
            out << indicator_names[i];
            if (e[i] != 1) out << "^" << e[i];
            printed_factor = true;
        }
    }
    return out.str();
}

}  // namespace valdim
