#include "valdim/dimcert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "valdim/linalg.hpp"

namespace valdim {

namespace {

bool same_order(const OrderSpec& a, const OrderSpec& b) {
    return a.kind == b.kind && a.priority == b.priority && a.rows == b.rows;
}

void check_shape(const DimCertificate& c) {
    if (!c.ring) throw std::invalid_argument("certificate without ring");
    size_t n1 = c.points.size();
    if (n1 == 0) throw std::invalid_argument("empty point tuple");
    if (c.witness.nind != static_cast<int>(n1) || c.witness.ring != c.ring)
        throw std::invalid_argument("witness shape mismatch");
    if (c.order.dim() != static_cast<int>(n1))
        throw std::invalid_argument("order dimension mismatch");
    if (c.trailing.size() != n1) throw std::invalid_argument("trailing monomial length mismatch");
    for (const auto& p : c.points)
        if (p.ring != c.ring) throw std::invalid_argument("point from a different ring");
}

}  // namespace

VerifyReport verify_dim_cert(const DimCertificate& c) {
    check_shape(c);
    if (c.ring->is_trivial())
        return {true, "trivial ring: every certificate holds (dimension -1 convention)"};
    if (c.witness.is_zero()) throw std::invalid_argument("zero witness");
    for (const auto& [e, coeff] : c.witness.terms)
        if (!exp_nonneg(e)) return {false, "witness support has a negative exponent"};
    auto [m, coeff] = trailing_term(c.witness, c.order);
    if (m != c.trailing) return {false, "declared trailing monomial is not the support minimum"};
    if (!equal(coeff, RingElement::one(c.ring)))
        return {false, "trailing coefficient is not 1"};
    if (!evaluate(c.witness, c.points).is_zero())
        return {false, "witness does not vanish at the points"};
    return {true, "ok"};
}

DimCertificate expand_nested(const NestedCollapse& nc) {
    size_t m = nc.exponents.size();
    if (m == 0 || nc.cofactors.size() != m || nc.points.size() != m)
        throw std::invalid_argument("nested collapse length mismatch");
    for (int e : nc.exponents)
        if (e < 0) throw std::invalid_argument("negative nesting exponent");
    int nind = static_cast<int>(m);
    auto level = [&](int k) {
        return mul_coeff(RPoly::indicator(nc.ring, nind, k), nc.cofactors[k]);
    };
    RPoly s = add(RPoly::constant(nc.ring, nind, 1), level(nind - 1));
    for (int k = nind - 2; k >= 0; --k) {
        ExpVec sh(nind, 0);
        sh[k + 1] = nc.exponents[k + 1];
        s = add(shift(s, sh), level(k));
    }
    ExpVec sh(nind, 0);
    sh[0] = nc.exponents[0];
    RPoly witness = shift(s, sh);

    std::vector<int> priority(nind);
    for (int i = 0; i < nind; ++i) priority[i] = i;
    DimCertificate c;
    c.ring = nc.ring;
    c.points = nc.points;
    c.order = OrderSpec::lex(priority);
    c.witness = std::move(witness);
    c.trailing = ExpVec(nc.exponents.begin(), nc.exponents.end());
    return c;
}

std::vector<Poly> coefficient_monomials(const RingPtr& ring, long bound,
                                        const std::vector<bool>& mask) {
    std::vector<int> allowed;
    for (int i = 0; i < ring->nvars(); ++i)
        if (mask.empty() || mask[i]) allowed.push_back(i);
    std::vector<ExpVec> exps;
    ExpVec e(ring->nvars(), 0);
    std::function<void(size_t, long)> gen = [&](size_t ai, long left) {
        if (ai == allowed.size()) {
            exps.push_back(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[allowed[ai]] = d;
            gen(ai + 1, left - d);
        }
        e[allowed[ai]] = 0;
    };
    gen(0, bound);
    std::sort(exps.begin(), exps.end(), [](const ExpVec& a, const ExpVec& b) {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    std::vector<Poly> nus;
    for (const auto& ev : exps) {
        Poly nu = Poly::monomial(ring->field, ring->nvars(), ev, 1);
        if (equal(normal_form(nu, ring->basis()), nu)) nus.push_back(std::move(nu));
    }
    return nus;
}

SearchOutcome search_dim_cert(const RingPtr& ring, const std::vector<RingElement>& points,
                              const OrderSpec& order, long degree_bound,
                              long coeff_degree_bound, const std::vector<bool>& coeff_var_mask) {
    int nind = static_cast<int>(points.size());
    if (nind == 0) throw std::invalid_argument("empty point tuple");
    if (order.dim() != nind) throw std::invalid_argument("order dimension mismatch");
    for (const auto& p : points)
        if (p.ring != ring) throw std::invalid_argument("point from a different ring");
    if (coeff_degree_bound < 0) coeff_degree_bound = degree_bound;

    SearchOutcome out;
    out.degree_bound = degree_bound;
    out.coeff_degree_bound = coeff_degree_bound;

    auto finish = [&](DimCertificate c) {
        VerifyReport rep = verify_dim_cert(c);
        if (!rep.ok) throw std::logic_error("search produced an unverifiable certificate: " +
                                            rep.diagnostic);
        out.cert = std::move(c);
        return out;
    };

    if (ring->is_trivial()) {
        DimCertificate c;
        c.ring = ring;
        c.points = points;
        c.order = order;
        c.witness = RPoly::constant(ring, nind, 1);  // the class of 1, which is 0 here
        c.trailing = ExpVec(nind, 0);
        return finish(std::move(c));
    }
    for (int j = 0; j < nind; ++j) {
        if (!points[j].is_zero()) continue;
        DimCertificate c;
        c.ring = ring;
        c.points = points;
        c.order = order;
        c.witness = RPoly::indicator(ring, nind, j);
        c.trailing = ExpVec(nind, 0);
        c.trailing[j] = 1;
        return finish(std::move(c));
    }

    std::vector<ExpVec> monos = ascending_monomials(nind, degree_bound, order);
    std::vector<std::vector<RingElement>> pt_pow(nind);
    for (int i = 0; i < nind; ++i) {
        pt_pow[i].push_back(RingElement::one(ring));
        for (long d = 1; d <= degree_bound; ++d)
            pt_pow[i].push_back(mul(pt_pow[i].back(), points[i]));
    }
    std::vector<Poly> eval_alpha;
    eval_alpha.reserve(monos.size());
    for (const auto& a : monos) {
        RingElement prod = RingElement::one(ring);
        for (int i = 0; i < nind; ++i)
            if (a[i] != 0) prod = mul(prod, pt_pow[i][a[i]]);
        eval_alpha.push_back(prod.repr);
    }
    std::vector<Poly> nus = coefficient_monomials(ring, coeff_degree_bound, coeff_var_mask);
    std::vector<std::vector<Poly>> column_poly(monos.size());
    for (size_t a = 0; a < monos.size(); ++a) {
        column_poly[a].reserve(nus.size());
        for (const auto& nu : nus)
            column_poly[a].push_back(normal_form(mul(nu, eval_alpha[a]), ring->basis()));
    }

    for (size_t mi = 0; mi < monos.size(); ++mi) {
        ++out.candidates_tried;
        std::map<ExpVec, size_t> row_of;
        auto touch = [&](const Poly& p) {
            for (const auto& [e, c] : p.terms)
                if (!row_of.count(e)) row_of.emplace(e, row_of.size());
        };
        touch(eval_alpha[mi]);
        for (size_t a = mi + 1; a < monos.size(); ++a)
            for (const auto& p : column_poly[a]) touch(p);
        size_t nrows = row_of.size();
        size_t ncols = (monos.size() - mi - 1) * nus.size();
        std::vector<std::vector<Rat>> mat(nrows, std::vector<Rat>(ncols, Rat(0)));
        std::vector<Rat> rhs(nrows, Rat(0));
        for (const auto& [e, c] : eval_alpha[mi].terms) rhs[row_of.at(e)] = -c;
        size_t col = 0;
        for (size_t a = mi + 1; a < monos.size(); ++a)
            for (const auto& p : column_poly[a]) {
                for (const auto& [e, c] : p.terms) mat[row_of.at(e)][col] = c;
                ++col;
            }
        auto sol = solve_canonical(ring->field, std::move(mat), std::move(rhs));
        if (!sol) continue;

        RPoly w = RPoly::zero(ring, nind);
        w.insert_term(monos[mi], RingElement::one(ring).repr);
        col = 0;
        for (size_t a = mi + 1; a < monos.size(); ++a)
            for (size_t v = 0; v < nus.size(); ++v, ++col)
                if ((*sol)[col] != 0) w.insert_term(monos[a], scale(nus[v], (*sol)[col]));
        DimCertificate c;
        c.ring = ring;
        c.points = points;
        c.order = order;
        c.witness = std::move(w);
        c.trailing = monos[mi];
        return finish(std::move(c));
    }
    return out;
}

DimCertificate lift_from_reduced(const DimCertificate& c, const RingPtr& target,
                                 long nilpotency_exponent) {
    check_shape(c);
    if (nilpotency_exponent < 1) throw std::invalid_argument("nilpotency exponent must be >= 1");
    if (target->vars != c.ring->vars)
        throw std::invalid_argument("target presentation has different variables");
    require_same_field(target->field, c.ring->field);

    std::vector<RingElement> points;
    for (const auto& p : c.points) points.push_back(RingElement::from_poly(target, p.repr));
    RPoly w = RPoly::zero(target, c.witness.nind);
    for (const auto& [e, coeff] : c.witness.terms) w.insert_term(e, coeff);
    RingElement tcoeff = w.coeff(c.trailing);
    w = sub(w, RPoly::monomial(target, w.nind, c.trailing,
                               sub(tcoeff, RingElement::one(target))));

    RingElement v = evaluate(w, points);
    if (!pow(v, nilpotency_exponent).is_zero())
        throw std::invalid_argument("evaluation is not nilpotent at the stated exponent");

    DimCertificate lifted;
    lifted.ring = target;
    lifted.points = std::move(points);
    lifted.order = c.order;
    lifted.witness = pow(w, nilpotency_exponent);
    lifted.trailing = c.trailing;
    for (auto& x : lifted.trailing) x = static_cast<int>(x * nilpotency_exponent);
    VerifyReport rep = verify_dim_cert(lifted);
    if (!rep.ok)
        throw std::logic_error("lifted certificate failed verification: " + rep.diagnostic);
    return lifted;
}

DimCertificate glue_components(const DimCertificate& c1, const DimCertificate& c2) {
    check_shape(c1);
    check_shape(c2);
    if (c1.ring != c2.ring) throw std::invalid_argument("certificates over different rings");
    if (c1.points.size() != c2.points.size())
        throw std::invalid_argument("point tuple length mismatch");
    for (size_t i = 0; i < c1.points.size(); ++i)
        if (!equal(c1.points[i], c2.points[i]))
            throw std::invalid_argument("certificates at different points");
    if (!same_order(c1.order, c2.order)) throw std::invalid_argument("order mismatch");

    const RingPtr& ring = c1.ring;
    ExpVec m(c1.trailing.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(c1.trailing[i], c2.trailing[i]);
    RPoly p1 = shift(c1.witness, exp_sub(m, c1.trailing));
    RPoly p2 = shift(c2.witness, exp_sub(m, c2.trailing));
    RingElement one = RingElement::one(ring);
    RingElement y1 = sub(p1.coeff(m), one);
    RingElement y2 = sub(p2.coeff(m), one);
    RingElement z1 = evaluate(p1, c1.points);
    RingElement z2 = evaluate(p2, c2.points);
    if (!mul(y1, y2).is_zero() || !mul(y1, z2).is_zero() || !mul(z1, y2).is_zero() ||
        !mul(z1, z2).is_zero())
        throw std::invalid_argument("component defects are not orthogonal");

    RPoly q1 = sub(p1, mul_coeff(p2, y1));
    RPoly q2 = sub(p2, mul_coeff(p1, y2));
    DimCertificate glued;
    glued.ring = ring;
    glued.points = c1.points;
    glued.order = c1.order;
    glued.witness = mul(q1, q2);
    glued.trailing = exp_add(m, m);
    VerifyReport rep = verify_dim_cert(glued);
    if (!rep.ok) throw std::logic_error("glued certificate failed verification: " + rep.diagnostic);
    return glued;
}

namespace {

SampledReport run_sampled(const RingPtr& ring, size_t tuple_len,
                          const std::vector<std::vector<RingElement>>& tuples,
                          const OrderSpec& order, long degree_bound, long coeff_degree_bound,
                          const std::string& claim) {
    SampledReport report;
    report.degree_bound = degree_bound;
    report.all_found = true;
    for (const auto& tuple : tuples) {
        if (tuple.size() != tuple_len)
            throw std::invalid_argument("sample tuple has the wrong length");
        TupleSearchReport tr;
        tr.points = tuple;
        tr.outcome = search_dim_cert(ring, tuple, order, degree_bound, coeff_degree_bound);
        if (!tr.outcome.cert) report.all_found = false;
        report.tuples.push_back(std::move(tr));
    }
    report.verdict = report.all_found
                         ? "consistent with " + claim + " at degree bound " +
                               std::to_string(degree_bound) + " on the sampled tuples"
                         : "not established within degree bound " + std::to_string(degree_bound);
    return report;
}

}  // namespace

SampledReport dimv_leq_sampled(const RingPtr& ring, int n,
                               const std::vector<std::vector<RingElement>>& tuples,
                               const OrderSpec& order, long degree_bound,
                               long coeff_degree_bound) {
    if (n < 0) throw std::invalid_argument("negative dimension bound");
    return run_sampled(ring, static_cast<size_t>(n) + 1, tuples, order, degree_bound,
                       coeff_degree_bound, "dimension <= " + std::to_string(n));
}

RingPtr polynomial_extension(const RingPtr& ring, int n, const std::string& prefix) {
    if (n < 0) throw std::invalid_argument("negative extension size");
    std::vector<std::string> vars = ring->vars;
    for (int i = 1; i <= n; ++i) {
        std::string name = prefix + std::to_string(i);
        if (ring->var_index(name) >= 0)
            throw std::invalid_argument("extension variable name collides: " + name);
        vars.push_back(name);
    }
    std::vector<int> slot(ring->nvars());
    for (int i = 0; i < ring->nvars(); ++i) slot[i] = i;
    std::vector<Poly> gens;
    for (const auto& g : ring->ideal_gens)
        gens.push_back(remap_vars(g, static_cast<int>(vars.size()), slot));
    return RingPresentation::make(ring->field, std::move(vars), std::move(gens),
                                  ring->assume_reduced, ring->assume_integral);
}

SampledReport vdim_leq_sampled(const RingPtr& extended_ring, int n,
                               const std::vector<std::vector<RingElement>>& tuples,
                               long degree_bound, long coeff_degree_bound) {
    if (n < 0) throw std::invalid_argument("negative dimension bound");
    int len = 2 * n + 1;
    std::vector<int> priority(len);
    for (int i = 0; i < len; ++i) priority[i] = len - 1 - i;  // last indicator most significant
    return run_sampled(extended_ring, static_cast<size_t>(len), tuples,
                       OrderSpec::lex(priority), degree_bound, coeff_degree_bound,
                       "dimension of the extension <= " + std::to_string(2 * n));
}

OrderIndependenceReport order_independence(const DimCertificate& c, const OrderSpec& o2,
                                           long degree_bound, long coeff_degree_bound) {
    if (!o2.graded()) throw std::invalid_argument("second order must be graded");
    OrderIndependenceReport report;
    report.first_found = verify_dim_cert(c).ok;
    report.second_bound = degree_bound;
    SearchOutcome second =
        search_dim_cert(c.ring, c.points, o2, degree_bound, coeff_degree_bound);
    if (!second.cert) {
        report.escalated = true;
        report.second_bound = 2 * degree_bound;
        second = search_dim_cert(c.ring, c.points, o2, 2 * degree_bound, coeff_degree_bound);
    }
    report.second_found = second.cert.has_value();
    report.second_cert = std::move(second.cert);
    report.agree = report.first_found == report.second_found;
    return report;
}

}  // namespace valdim
