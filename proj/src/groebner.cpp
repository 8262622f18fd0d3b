#include "valdim/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace valdim {

namespace {

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Poly make_monic(const Poly& p, const OrderSpec& o) {
    if (p.is_zero()) return p;
    auto [e, c] = leading_term(p, o);
    return scale(p, p.field.inv(c));
}

Poly mono_mult(const Poly& p, const ExpVec& m, const Rat& c) {
    Poly r = Poly::zero(p.field, p.nvars, p.laurent);
    for (const auto& [e, pc] : p.terms) r.terms.emplace(exp_add(e, m), p.field.mul(pc, c));
    return r;
}

struct BasisElem {
    Poly p;
    ExpVec lt;
    long sugar;
};

Poly reduce_full(const Poly& f, const std::vector<BasisElem>& basis, const OrderSpec& o,
                 long* sugar_out) {
    Poly h = f;
    Poly r = Poly::zero(f.field, f.nvars);
    long sugar = f.degree();
    while (!h.is_zero()) {
        auto [lt, lc] = leading_term(h, o);
        bool reduced = false;
        for (const auto& g : basis) {
            if (!exp_leq(g.lt, lt)) continue;
            ExpVec m = exp_sub(lt, g.lt);
            h = sub(h, mono_mult(g.p, m, lc));
            sugar = std::max(sugar, g.sugar + total_degree(m));
            reduced = true;
            break;
        }
        if (!reduced) {
            r.insert_term(lt, lc);
            h.terms.erase(lt);
        }
    }
    if (sugar_out) *sugar_out = sugar;
    return r;
}

struct Pair {
    size_t i, j;
    ExpVec lcm;
    long sugar;
};

void push_pairs(std::vector<Pair>& pairs, const std::vector<BasisElem>& basis, size_t k) {
    for (size_t i = 0; i < k; ++i) {
        ExpVec l = exp_lcm(basis[i].lt, basis[k].lt);
        long sugar = std::max(basis[i].sugar + total_degree(exp_sub(l, basis[i].lt)),
                              basis[k].sugar + total_degree(exp_sub(l, basis[k].lt)));
        pairs.push_back(Pair{i, k, std::move(l), sugar});
    }
}

}  // namespace

bool GroebnerBasis::trivial() const {
    for (const auto& g : gens)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

GroebnerBasis buchberger(const Field& field, int nvars, const std::vector<Poly>& gens,
                         const OrderSpec& order) {
    if (order.dim() != nvars) throw std::invalid_argument("order dimension mismatch");
    std::vector<BasisElem> basis;
    for (const auto& g : gens) {
        require_same_field(field, g.field);
        if (g.nvars != nvars) throw std::invalid_argument("generator variable count mismatch");
        for (const auto& [e, c] : g.terms)
            if (!exp_nonneg(e))
                throw std::invalid_argument("Laurent polynomial in ideal computation");
        if (g.is_zero()) continue;
        Poly m = make_monic(g, order);
        basis.push_back(BasisElem{m, leading_term(m, order).first, m.degree()});
    }

    std::vector<Pair> pairs;
    for (size_t k = 0; k < basis.size(); ++k) push_pairs(pairs, basis, k);

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            const Pair &a = pairs[i], &b = pairs[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = i;
                continue;
            }
            Cmp c = compare(a.lcm, b.lcm, order);
            if (c == Cmp::Less || (c == Cmp::Equal && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = i;
        }
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + best);

        if (pr.lcm == exp_add(basis[pr.i].lt, basis[pr.j].lt)) continue;  // coprime criterion

        Poly s = sub(mono_mult(basis[pr.i].p, exp_sub(pr.lcm, basis[pr.i].lt), Rat(1)),
                     mono_mult(basis[pr.j].p, exp_sub(pr.lcm, basis[pr.j].lt), Rat(1)));
        long sugar = pr.sugar;
        Poly h = reduce_full(s, basis, order, &sugar);
        if (h.is_zero()) continue;
        h = make_monic(h, order);
        basis.push_back(BasisElem{h, leading_term(h, order).first, sugar});
        push_pairs(pairs, basis, basis.size() - 1);
    }

    // auto-reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<BasisElem> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            Poly h = reduce_full(basis[i].p, others, order, nullptr);
            if (equal(h, basis[i].p)) continue;
            changed = true;
            if (h.is_zero()) {
                basis.erase(basis.begin() + i);
            } else {
                h = make_monic(h, order);
                basis[i] = BasisElem{h, leading_term(h, order).first, h.degree()};
            }
            break;
        }
    }

    std::sort(basis.begin(), basis.end(), [&](const BasisElem& a, const BasisElem& b) {
        return compare(a.lt, b.lt, order) == Cmp::Less;
    });

    GroebnerBasis gb;
    gb.field = field;
    gb.nvars = nvars;
    gb.order = order;
    for (auto& b : basis) {
        b.p.laurent = false;
        gb.gens.push_back(std::move(b.p));
    }
    return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    require_same_field(f.field, gb.field);
    if (f.nvars != gb.nvars) throw std::invalid_argument("variable count mismatch");
    std::vector<BasisElem> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens)
        basis.push_back(BasisElem{g, leading_term(g, gb.order).first, g.degree()});
    return reduce_full(f, basis, gb.order, nullptr);
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

OrderSpec elimination_order(int nvars, const std::vector<bool>& eliminate) {
    if (static_cast<int>(eliminate.size()) != nvars)
        throw std::invalid_argument("elimination mask length mismatch");
    OrderSpec o;
    o.kind = OrderSpec::Kind::Matrix;
    std::vector<long> indicator(nvars, 0);
    for (int i = 0; i < nvars; ++i) indicator[i] = eliminate[i] ? 1 : 0;
    o.rows.push_back(std::move(indicator));
    o.rows.emplace_back(nvars, 1);
    for (int i = 0; i + 1 < nvars; ++i) {
        std::vector<long> row(nvars, 0);
        row[i] = 1;
        o.rows.push_back(std::move(row));
    }
    return o;
}

std::vector<Poly> eliminate_vars(const Field& field, int nvars, const std::vector<Poly>& gens,
                                 const std::vector<bool>& eliminate) {
    GroebnerBasis gb = buchberger(field, nvars, gens, elimination_order(nvars, eliminate));
    std::vector<Poly> kept;
    for (const auto& g : gb.gens) {
        bool free_of_elim = true;
        for (const auto& [e, c] : g.terms)
            for (int i = 0; i < nvars && free_of_elim; ++i)
                if (eliminate[i] && e[i] != 0) free_of_elim = false;
        if (free_of_elim) kept.push_back(g);
    }
    return kept;
}

std::vector<Poly> canonical_gens(const Field& field, int nvars, const std::vector<Poly>& gens) {
    return buchberger(field, nvars, gens, OrderSpec::grlex(nvars)).gens;
}

namespace {

// Appends a fresh variable as index nvars; existing variables keep their slots.
Poly lift_to_extended(const Poly& p, int nvars) {
    std::vector<int> slot(nvars);
    for (int i = 0; i < nvars; ++i) slot[i] = i;
    return remap_vars(p, nvars + 1, slot);
}

Poly drop_extension(const Poly& p, int nvars) {
    std::vector<int> slot(nvars + 1);
    for (int i = 0; i < nvars; ++i) slot[i] = i;
    slot[nvars] = -1;  // remap_vars rejects use of the dropped variable
    return remap_vars(p, nvars, slot);
}

}  // namespace

std::vector<Poly> ideal_intersect(const Field& field, int nvars, const std::vector<Poly>& a,
                                  const std::vector<Poly>& b) {
    Poly t = Poly::variable(field, nvars + 1, nvars);
    Poly one_minus_t = sub(Poly::constant(field, nvars + 1, 1), t);
    std::vector<Poly> gens;
    for (const auto& p : a) gens.push_back(mul(t, lift_to_extended(p, nvars)));
    for (const auto& p : b) gens.push_back(mul(one_minus_t, lift_to_extended(p, nvars)));
    std::vector<bool> mask(nvars + 1, false);
    mask[nvars] = true;
    std::vector<Poly> kept = eliminate_vars(field, nvars + 1, gens, mask);
    std::vector<Poly> result;
    for (const auto& p : kept) result.push_back(drop_extension(p, nvars));
    return canonical_gens(field, nvars, result);
}

std::vector<Poly> ideal_product(const Field& field, int nvars, const std::vector<Poly>& a,
                                const std::vector<Poly>& b) {
    std::vector<Poly> gens;
    for (const auto& p : a)
        for (const auto& q : b) gens.push_back(mul(p, q));
    return canonical_gens(field, nvars, gens);
}

std::vector<Poly> ideal_quotient(const Field& field, int nvars, const std::vector<Poly>& ideal,
                                 const Poly& f) {
    if (f.is_zero()) return {Poly::constant(field, nvars, 1)};
    std::vector<Poly> inter = ideal_intersect(field, nvars, ideal, {f});
    std::vector<Poly> result;
    for (const auto& g : inter) {
        auto q = divide_exact(g, f);
        if (!q) throw std::logic_error("intersection with principal ideal not divisible");
        result.push_back(*q);
    }
    return canonical_gens(field, nvars, result);
}

std::vector<Poly> ideal_quotient_ideal(const Field& field, int nvars,
                                       const std::vector<Poly>& ideal,
                                       const std::vector<Poly>& j_gens) {
    std::vector<Poly> result = {Poly::constant(field, nvars, 1)};
    bool any = false;
    for (const auto& f : j_gens) {
        if (f.is_zero()) continue;
        any = true;
        result = ideal_intersect(field, nvars, result, ideal_quotient(field, nvars, ideal, f));
    }
    if (!any) return {Poly::constant(field, nvars, 1)};
    return result;
}

std::vector<Poly> saturation(const Field& field, int nvars, const std::vector<Poly>& ideal,
                             const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("saturation by zero");
    Poly t = Poly::variable(field, nvars + 1, nvars);
    std::vector<Poly> gens;
    for (const auto& p : ideal) gens.push_back(lift_to_extended(p, nvars));
    gens.push_back(sub(Poly::constant(field, nvars + 1, 1), mul(t, lift_to_extended(f, nvars))));
    std::vector<bool> mask(nvars + 1, false);
    mask[nvars] = true;
    std::vector<Poly> kept = eliminate_vars(field, nvars + 1, gens, mask);
    std::vector<Poly> result;
    for (const auto& p : kept) result.push_back(drop_extension(p, nvars));
    return canonical_gens(field, nvars, result);
}

bool radical_member(const Poly& f, const Field& field, int nvars,
                    const std::vector<Poly>& ideal) {
    Poly t = Poly::variable(field, nvars + 1, nvars);
    std::vector<Poly> gens;
    for (const auto& p : ideal) gens.push_back(lift_to_extended(p, nvars));
    gens.push_back(sub(Poly::constant(field, nvars + 1, 1), mul(t, lift_to_extended(f, nvars))));
    return buchberger(field, nvars + 1, gens, OrderSpec::grlex(nvars + 1)).trivial();
}

long radical_exponent(const Poly& f, const GroebnerBasis& gb, long cap) {
    Poly power = Poly::constant(gb.field, gb.nvars, 1);
    for (long m = 0; m <= cap; ++m) {
        if (normal_form(power, gb).is_zero()) return m;
        power = mul(power, f);
    }
    throw std::runtime_error("radical exponent exceeds cap");
}

std::optional<Poly> divide_exact(const Poly& g, const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    OrderSpec o = OrderSpec::grlex(f.nvars);
    auto [ltf, lcf] = leading_term(f, o);
    Poly q = Poly::zero(g.field, g.nvars, g.laurent);
    Poly r = g;
    while (!r.is_zero()) {
        auto [ltr, lcr] = leading_term(r, o);
        if (!exp_leq(ltf, ltr)) return std::nullopt;
        ExpVec m = exp_sub(ltr, ltf);
        Rat c = g.field.div(lcr, lcf);
        q.insert_term(m, c);
        r = sub(r, mono_mult(f, m, c));
    }
    return q;
}

}  // namespace valdim
