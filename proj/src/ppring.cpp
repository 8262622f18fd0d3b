#include "valdim/ppring.hpp"

#include <stdexcept>

#include "valdim/groebner.hpp"

namespace valdim {

namespace {

bool same_ideal(const Field& f, int nvars, const std::vector<Poly>& a,
                const std::vector<Poly>& b) {
    std::vector<Poly> ca = canonical_gens(f, nvars, a);
    std::vector<Poly> cb = canonical_gens(f, nvars, b);
    if (ca.size() != cb.size()) return false;
    for (size_t i = 0; i < ca.size(); ++i)
        if (!equal(ca[i], cb[i])) return false;
    return true;
}

RingPtr quotient_by(const RingPtr& parent, std::vector<Poly> ideal) {
    return RingPresentation::make(parent->field, parent->vars,
                                  canonical_gens(parent->field, parent->nvars(), ideal),
                                  parent->assume_reduced, false);
}

void check_injective(const RingPtr& parent, const std::vector<SplitComponent>& components) {
    std::vector<Poly> meet = {Poly::constant(parent->field, parent->nvars(), 0)};
    bool first = true;
    for (const auto& c : components) {
        if (first) {
            meet = c.ring->ideal_gens;
            first = false;
        } else {
            meet = ideal_intersect(parent->field, parent->nvars(), meet, c.ring->ideal_gens);
        }
    }
    if (!same_ideal(parent->field, parent->nvars(), meet, parent->ideal_gens))
        throw std::invalid_argument(
            "component ideals do not intersect in the defining ideal: "
            "the presentation is not reduced");
}

}  // namespace

std::vector<Poly> annihilator(const RingPtr& ring, const RingElement& a) {
    if (a.ring != ring) throw std::invalid_argument("element from a different ring");
    return canonical_gens(ring->field, ring->nvars(),
                          ideal_quotient(ring->field, ring->nvars(), ring->ideal_gens, a.repr));
}

ComponentSplit split_at(const RingPtr& ring, const RingElement& a) {
    if (a.ring != ring) throw std::invalid_argument("element from a different ring");
    if (!ring->assume_reduced)
        throw std::invalid_argument("splitting requires an assume_reduced presentation");
    std::vector<Poly> ann = annihilator(ring, a);
    std::vector<Poly> ann2 =
        ideal_quotient_ideal(ring->field, ring->nvars(), ring->ideal_gens, ann);
    ComponentSplit split;
    split.parent = ring;
    split.components.push_back({quotient_by(ring, ann), {}});
    split.components.push_back({quotient_by(ring, ann2), {0}});
    check_injective(ring, split.components);
    return split;
}

ComponentSplit split_sequence(const RingPtr& ring, const std::vector<RingElement>& elems) {
    if (!ring->assume_reduced)
        throw std::invalid_argument("splitting requires an assume_reduced presentation");
    for (const auto& e : elems)
        if (e.ring != ring) throw std::invalid_argument("element from a different ring");
    size_t n = elems.size();
    if (n > 16) throw std::invalid_argument("too many split elements");
    ComponentSplit split;
    split.parent = ring;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<Poly> zero_gens;
        std::vector<int> zero_set;
        Poly prod = Poly::constant(ring->field, ring->nvars(), 1);
        for (size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1ul) {
                zero_gens.push_back(elems[i].repr);
                zero_set.push_back(static_cast<int>(i));
            } else {
                prod = mul(prod, elems[i].repr);
            }
        }
        std::vector<Poly> perp =
            ideal_quotient_ideal(ring->field, ring->nvars(), ring->ideal_gens, zero_gens);
        std::vector<Poly> scaled;
        for (const auto& q : perp) scaled.push_back(mul(q, prod));
        std::vector<Poly> a_set =
            ideal_quotient_ideal(ring->field, ring->nvars(), ring->ideal_gens, scaled);
        split.components.push_back({quotient_by(ring, a_set), std::move(zero_set)});
    }
    check_injective(ring, split.components);
    return split;
}

std::vector<std::vector<ElementClass>> regular_split_check(const ComponentSplit& split,
                                                           const std::vector<RingElement>& xs) {
    for (const auto& x : xs)
        if (x.ring != split.parent) throw std::invalid_argument("element from a different ring");
    std::vector<std::vector<ElementClass>> classes;
    for (const auto& comp : split.components) {
        std::vector<ElementClass> row;
        for (const auto& x : xs) {
            RingElement image = RingElement::from_poly(comp.ring, x.repr);
            if (image.is_zero()) {
                row.push_back(ElementClass::Zero);
                continue;
            }
            std::vector<Poly> quot = ideal_quotient(comp.ring->field, comp.ring->nvars(),
                                                    comp.ring->ideal_gens, image.repr);
            if (same_ideal(comp.ring->field, comp.ring->nvars(), quot, comp.ring->ideal_gens)) {
                row.push_back(ElementClass::Regular);
                continue;
            }
            throw std::invalid_argument(
                "element is neither zero nor regular in a component: "
                "the presentation is not reduced");
        }
        classes.push_back(std::move(row));
    }
    return classes;
}

namespace {

DimCertificate reinterpret_over(const DimCertificate& c, const RingPtr& target,
                                const std::vector<RingElement>& points) {
    DimCertificate out;
    out.ring = target;
    out.points = points;
    out.order = c.order;
    out.witness = RPoly::zero(target, c.witness.nind);
    for (const auto& [e, coeff] : c.witness.terms) out.witness.insert_term(e, coeff);
    out.trailing = c.trailing;
    return out;
}

DimCertificate machinery_recurse(const RingPtr& ring, const std::vector<RingElement>& points,
                                 const OrderSpec& order, long degree_bound,
                                 long coeff_degree_bound) {
    auto direct = [&]() {
        SearchOutcome out =
            search_dim_cert(ring, points, order, degree_bound, coeff_degree_bound);
        if (!out.cert)
            throw std::runtime_error("component search exhausted the degree bound");
        return *out.cert;
    };
    if (ring->is_trivial() || ring->assume_integral) return direct();
    for (const auto& p : points)
        if (p.is_zero()) return direct();

    int split_index = -1;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<Poly> quot = ideal_quotient(ring->field, ring->nvars(), ring->ideal_gens,
                                                points[i].repr);
        if (!same_ideal(ring->field, ring->nvars(), quot, ring->ideal_gens)) {
            split_index = static_cast<int>(i);
            break;
        }
    }
    if (split_index < 0) return direct();  // every point is regular

    ComponentSplit split = split_at(ring, points[split_index]);
    std::vector<DimCertificate> parts;
    for (const auto& comp : split.components) {
        std::vector<RingElement> comp_points;
        for (const auto& p : points)
            comp_points.push_back(RingElement::from_poly(comp.ring, p.repr));
        parts.push_back(machinery_recurse(comp.ring, comp_points, order, degree_bound,
                                          coeff_degree_bound));
    }
    return glue_components(reinterpret_over(parts[0], ring, points),
                           reinterpret_over(parts[1], ring, points));
}

}  // namespace

DimCertificate machinery_no1_dimcert(const RingPtr& ring, const std::vector<RingElement>& points,
                                     const OrderSpec& order, long degree_bound,
                                     long coeff_degree_bound) {
    DimCertificate c = machinery_recurse(ring, points, order, degree_bound, coeff_degree_bound);
    VerifyReport rep = verify_dim_cert(c);
    if (!rep.ok)
        throw std::logic_error("machinery produced an unverifiable certificate: " +
                               rep.diagnostic);
    return c;
}

}  // namespace valdim
