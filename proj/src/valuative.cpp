#include "valdim/valuative.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "valdim/groebner.hpp"
#include "valdim/linalg.hpp"

namespace valdim {

namespace {

void require_over(const FracElement& v, const RingPtr& ring, const char* what) {
    if (v.num.ring != ring || v.den.ring != ring)
        throw std::invalid_argument(std::string(what) + " over a different ring");
}

// exponent vectors with the given slot count, total ≤ bound, ascending by
// (total, lex)
template <typename Int>
std::vector<std::vector<Int>> bounded_exponents(int slots, long bound) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> e(slots, 0);
    std::function<void(int, long)> gen = [&](int i, long rest) {
        if (i == slots) {
            out.push_back(e);
            return;
        }
        for (long d = 0; d <= rest; ++d) {
            e[i] = static_cast<Int>(d);
            gen(i + 1, rest - d);
        }
        e[i] = 0;
    };
    gen(0, bound);
    std::sort(out.begin(), out.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  long da = 0, db = 0;
                  for (Int v : a) da += v;
                  for (Int v : b) db += v;
                  if (da != db) return da < db;
                  return a < b;
              });
    return out;
}

// β with β_i ≤ p_i componentwise, ascending by (total, lex)
std::vector<std::vector<long>> capped_exponents(const std::vector<long>& p) {
    std::vector<std::vector<long>> out;
    std::vector<long> e(p.size(), 0);
    std::function<void(size_t)> gen = [&](size_t i) {
        if (i == p.size()) {
            out.push_back(e);
            return;
        }
        for (long d = 0; d <= p[i]; ++d) {
            e[i] = d;
            gen(i + 1);
        }
        e[i] = 0;
    };
    gen(0);
    std::sort(out.begin(), out.end(),
              [](const std::vector<long>& a, const std::vector<long>& b) {
                  long da = 0, db = 0;
                  for (long v : a) da += v;
                  for (long v : b) db += v;
                  if (da != db) return da < db;
                  return a < b;
              });
    return out;
}

std::vector<RingElement> power_table(const RingElement& a, long top) {
    std::vector<RingElement> t{RingElement::one(a.ring)};
    for (long k = 1; k <= top; ++k) t.push_back(mul(t.back(), a));
    return t;
}

}  // namespace

VerifyReport verify_val_cert(const ValCert& c, const RingPtr& ring) {
    if (!ring->assume_integral)
        throw std::invalid_argument("valuative certificates need an assume_integral presentation");
    for (const auto& v : c.left) require_over(v, ring, "left atom");
    for (const auto& v : c.right) require_over(v, ring, "right atom");

    VerifyReport rep;
    const int nr = static_cast<int>(c.right.size());
    const int nl = static_cast<int>(c.left.size());
    if (static_cast<int>(c.exponents.size()) != nl) {
        rep.diagnostic = "one exponent per left atom required";
        return rep;
    }
    for (long p : c.exponents)
        if (p < 0) {
            rep.diagnostic = "negative left exponent";
            return rep;
        }
    const size_t npolys = c.form == ValCertForm::Vprime ? static_cast<size_t>(nr) : 1;
    if (c.polys.size() != npolys) {
        rep.diagnostic = "wrong polynomial count for the certificate form";
        return rep;
    }
    for (const RPoly& P : c.polys) {
        if (P.ring != ring) {
            rep.diagnostic = "certificate polynomial over a different ring";
            return rep;
        }
        if (P.nind != nr + nl) {
            rep.diagnostic = "certificate polynomial has the wrong indicator count";
            return rep;
        }
        for (const auto& [e, coeff] : P.terms) {
            (void)coeff;
            for (int i = 0; i < nr + nl; ++i)
                if (e[i] < 0) {
                    rep.diagnostic = "negative indicator exponent";
                    return rep;
                }
            for (int i = 0; i < nl; ++i) {
                bool ok = c.form == ValCertForm::Vprime ? e[nr + i] <= c.exponents[i]
                                                        : e[nr + i] < c.exponents[i];
                if (!ok) {
                    rep.diagnostic = "left indicator exponent exceeds its bound";
                    return rep;
                }
            }
        }
    }

    std::vector<FracElement> at;
    at.reserve(nr + nl);
    for (const auto& x : c.right) at.push_back(x);
    for (const auto& y : c.left) at.push_back(y);
    FracElement lhs = FracElement::whole(RingElement::one(ring));
    for (int i = 0; i < nl; ++i) lhs = mul(lhs, pow(c.left[i], c.exponents[i]));
    FracElement rhs = FracElement::whole(RingElement::zero(ring));
    if (c.form == ValCertForm::Vprime) {
        for (int j = 0; j < nr; ++j)
            if (!c.polys[j].is_zero()) rhs = add(rhs, mul(c.right[j], evaluate(c.polys[j], at)));
    } else {
        if (!c.polys[0].is_zero()) rhs = evaluate(c.polys[0], at);
    }
    if (!equal(lhs, rhs)) {
        rep.diagnostic = "identity does not reduce to 0";
        return rep;
    }
    rep.ok = true;
    return rep;
}

ValSearchOutcome search_val_cert(const RingPtr& ring, const std::vector<FracElement>& left,
                                 const std::vector<FracElement>& right, long p_bound,
                                 long deg_bound, long coeff_degree_bound) {
    if (!ring->assume_integral)
        throw std::invalid_argument("certificate search needs an assume_integral presentation");
    if (p_bound < 0 || deg_bound < 0) throw std::invalid_argument("negative search bound");
    if (coeff_degree_bound < 0) coeff_degree_bound = deg_bound;
    for (const auto& v : left) require_over(v, ring, "left atom");
    for (const auto& v : right) require_over(v, ring, "right atom");

    ValSearchOutcome out;
    out.p_bound = p_bound;
    out.deg_bound = deg_bound;
    out.coeff_degree_bound = coeff_degree_bound;

    const int m = static_cast<int>(left.size());
    const int nr = static_cast<int>(right.size());

    auto finish = [&](ValCert cert) {
        VerifyReport rep = verify_val_cert(cert, ring);
        if (!rep.ok)
            throw std::logic_error("search produced an unverifiable certificate: " +
                                   rep.diagnostic);
        out.cert = std::move(cert);
        return out;
    };

    for (int i = 0; i < m; ++i)
        if (left[i].is_zero()) {
            ValCert cert;
            cert.left = left;
            cert.right = right;
            cert.exponents.assign(m, 1);
            cert.polys.assign(nr, RPoly::zero(ring, nr + m));
            return finish(std::move(cert));
        }
    if (nr == 0) return out;

    const auto alphas = bounded_exponents<int>(nr, deg_bound);
    const std::vector<Poly> nus = coefficient_monomials(ring, coeff_degree_bound);
    const auto pvecs = bounded_exponents<long>(m, p_bound);

    std::vector<std::vector<RingElement>> xn, xd, yn, yd;
    for (int j = 0; j < nr; ++j) {
        xn.push_back(power_table(right[j].num, deg_bound + 1));
        xd.push_back(power_table(right[j].den, deg_bound + 1));
    }
    for (int i = 0; i < m; ++i) {
        yn.push_back(power_table(left[i].num, p_bound));
        yd.push_back(power_table(left[i].den, p_bound));
    }

    struct Col {
        int j;
        size_t ai, bi, vi;
    };

    for (const auto& p : pvecs) {
        const auto betas = capped_exponents(p);

        RingElement lhs_clear = RingElement::one(ring);
        for (int i = 0; i < m; ++i) lhs_clear = mul(lhs_clear, yn[i][p[i]]);
        for (int j = 0; j < nr; ++j) lhs_clear = mul(lhs_clear, xd[j][deg_bound + 1]);

        std::vector<Col> cols;
        std::vector<Poly> colval;
        for (int j = 0; j < nr; ++j)
            for (size_t ai = 0; ai < alphas.size(); ++ai)
                for (size_t bi = 0; bi < betas.size(); ++bi) {
                    RingElement base = RingElement::one(ring);
                    for (int j2 = 0; j2 < nr; ++j2) {
                        int up = alphas[ai][j2] + (j2 == j ? 1 : 0);
                        base = mul(base, xn[j2][up]);
                        base = mul(base, xd[j2][deg_bound + 1 - up]);
                    }
                    for (int i = 0; i < m; ++i) {
                        base = mul(base, yn[i][betas[bi][i]]);
                        base = mul(base, yd[i][p[i] - betas[bi][i]]);
                    }
                    if (base.is_zero()) continue;
                    for (size_t vi = 0; vi < nus.size(); ++vi) {
                        Poly v = normal_form(mul(base.repr, nus[vi]), ring->basis());
                        if (v.is_zero()) continue;
                        cols.push_back({j, ai, bi, vi});
                        colval.push_back(std::move(v));
                    }
                }

        std::map<ExpVec, size_t> row_of;
        auto rows_from = [&](const Poly& q) {
            for (const auto& [e, cf] : q.terms) {
                (void)cf;
                row_of.emplace(e, row_of.size());
            }
        };
        rows_from(lhs_clear.repr);
        for (const Poly& v : colval) rows_from(v);

        std::vector<std::vector<Rat>> mat(row_of.size(),
                                          std::vector<Rat>(cols.size(), Rat(0)));
        std::vector<Rat> rhs(row_of.size(), Rat(0));
        for (const auto& [e, cf] : lhs_clear.repr.terms) rhs[row_of[e]] = cf;
        for (size_t ci = 0; ci < colval.size(); ++ci)
            for (const auto& [e, cf] : colval[ci].terms) mat[row_of[e]][ci] = cf;

        auto sol = solve_canonical(ring->field, std::move(mat), std::move(rhs));
        if (!sol) continue;

        ValCert cert;
        cert.left = left;
        cert.right = right;
        cert.exponents = p;
        cert.polys.assign(nr, RPoly::zero(ring, nr + m));
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            if ((*sol)[ci] == Rat(0)) continue;
            const Col& col = cols[ci];
            ExpVec e(nr + m, 0);
            for (int j2 = 0; j2 < nr; ++j2) e[j2] = alphas[col.ai][j2];
            for (int i = 0; i < m; ++i) e[nr + i] = static_cast<int>(betas[col.bi][i]);
            cert.polys[col.j].insert_term(e, scale(nus[col.vi], (*sol)[ci]));
        }
        return finish(std::move(cert));
    }
    return out;
}

ValuativeOracle::ValuativeOracle(RingPtr ring, long p_bound, long deg_bound,
                                 long coeff_degree_bound)
    : ring_(std::move(ring)),
      p_bound_(p_bound),
      deg_bound_(deg_bound),
      coeff_degree_bound_(coeff_degree_bound) {
    if (!ring_->assume_integral)
        throw std::invalid_argument("valuative oracle needs an assume_integral presentation");
}

int ValuativeOracle::intern(const FracElement& v) {
    require_over(v, ring_, "atom");
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (equal(atoms_[i], v)) return static_cast<int>(i);
    atoms_.push_back(v);
    return static_cast<int>(atoms_.size()) - 1;
}

const FracElement& ValuativeOracle::atom_value(int id) const {
    if (id < 0 || id >= atom_count()) throw std::invalid_argument("atom id out of range");
    return atoms_[static_cast<size_t>(id)];
}

namespace {
std::pair<std::vector<int>, std::vector<int>> sequent_key(std::vector<int> lhs,
                                                          std::vector<int> rhs) {
    std::sort(lhs.begin(), lhs.end());
    lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    return {std::move(lhs), std::move(rhs)};
}
}  // namespace

void ValuativeOracle::add_hint(std::vector<int> lhs, std::vector<int> rhs, ValCert cert) {
    for (int id : lhs) atom_value(id);
    for (int id : rhs) atom_value(id);
    VerifyReport rep = verify_val_cert(cert, ring_);
    if (!rep.ok)
        throw std::invalid_argument("hint certificate does not verify: " + rep.diagnostic);
    hints_[sequent_key(std::move(lhs), std::move(rhs))] = std::move(cert);
}

Decision ValuativeOracle::decide(const std::vector<int>& lhs,
                                 const std::vector<int>& rhs) const {
    for (int id : lhs) atom_value(id);
    for (int id : rhs) atom_value(id);
    auto key = sequent_key(lhs, rhs);
    auto it = hints_.find(key);
    if (it != hints_.end())
        return Decision::proved({{"method", "hint"}, {"p", it->second.exponents}});
    std::vector<FracElement> lv, rv;
    for (int id : key.first) lv.push_back(atoms_[static_cast<size_t>(id)]);
    for (int id : key.second) rv.push_back(atoms_[static_cast<size_t>(id)]);
    ValSearchOutcome so =
        search_val_cert(ring_, lv, rv, p_bound_, deg_bound_, coeff_degree_bound_);
    if (so.cert)
        return Decision::proved({{"method", "search"}, {"p", so.cert->exponents}});
    return Decision::unknown(p_bound_, {{"reason", "no certificate within bounds"}});
}

std::string ValuativeOracle::atom_name(int id) const {
    return "V'(" + atom_value(id).to_string() + ")";
}

WitnessDecomposition decompose_witness(const DimCertificate& c,
                                       const std::vector<long>& forced_r) {
    VerifyReport rep = verify_dim_cert(c);
    if (!rep.ok)
        throw std::invalid_argument("cannot decompose an unverified certificate: " +
                                    rep.diagnostic);
    if (c.ring->is_trivial())
        throw std::invalid_argument("the trivial ring has no layered form");
    const int nind = c.witness.nind;
    const int n = nind - 1;
    bool lex_ok =
        c.order.kind == OrderSpec::Kind::Lex && static_cast<int>(c.order.priority.size()) == nind;
    if (lex_ok)
        for (int i = 0; i < nind; ++i)
            if (c.order.priority[i] != n - i) lex_ok = false;
    if (!lex_ok)
        throw std::invalid_argument(
            "layered form needs lex order with the last indicator most significant");

    WitnessDecomposition d;
    d.cert = c;
    d.q = c.trailing;

    ExpVec minus_q(nind);
    for (int i = 0; i < nind; ++i) minus_q[i] = -c.trailing[i];
    RPoly divided = shift(c.witness, minus_q);

    std::vector<RPoly> layer(nind, RPoly::zero(c.ring, nind, true));
    bool saw_unit = false;
    for (const auto& [e, coeff] : divided.terms) {
        int k = -1;
        for (int i = nind - 1; i >= 0; --i)
            if (e[i] != 0) {
                k = i;
                break;
            }
        if (k < 0) {
            saw_unit = true;
            continue;
        }
        if (e[k] < 0)
            throw std::invalid_argument(
                "layer assignment violates lex minimality of the trailing term");
        layer[k].insert_term(e, coeff);
    }
    if (!saw_unit) throw std::logic_error("divided witness lost its unit term");

    std::vector<RPoly> f(nind, RPoly::zero(c.ring, nind, true));
    for (int k = 0; k < nind; ++k) {
        if (layer[k].is_zero()) continue;
        ExpVec s(nind, 0);
        s[k] = -1;
        f[k] = shift(layer[k], s);
    }
    d.f0 = f[0];

    if (n >= 1) {
        std::vector<long> rs(n, 0);
        if (n == 1) {
            rs[0] = f[1].is_zero() ? 0 : std::max(0L, -static_cast<long>(f[1].min_exp(0)));
        } else {
            for (int j = 0; j <= n - 2; ++j) {
                long r = 0;
                for (int k = j + 1; k <= n; ++k)
                    if (!f[k].is_zero()) r = std::max(r, static_cast<long>(f[k].max_exp(j)));
                rs[j] = r;
            }
            rs[n - 1] =
                f[n].is_zero() ? 0 : std::max(0L, -static_cast<long>(f[n].min_exp(n - 1)));
        }
        if (!forced_r.empty()) {
            if (static_cast<int>(forced_r.size()) != n)
                throw std::invalid_argument("forced exponent vector has the wrong length");
            for (long r : forced_r)
                if (r < 0) throw std::invalid_argument("negative forced exponent");
            rs = forced_r;
        }
        d.rs = rs;

        d.gs.assign(n, RPoly::zero(c.ring, nind, true));
        for (int k = 1; k <= n - 1; ++k) {
            if (f[k].is_zero()) continue;
            ExpVec s(nind, 0);
            for (int j = 0; j < k; ++j) s[j] = static_cast<int>(-rs[j]);
            d.gs[k - 1] = shift(f[k], s);
        }
        if (!f[n].is_zero()) {
            ExpVec s(nind, 0);
            for (int j = 0; j <= n - 2; ++j) s[j] = static_cast<int>(-rs[j]);
            s[n - 1] = static_cast<int>(rs[n - 1]);
            d.gs[n - 1] = shift(f[n], s);
        }

        for (int k = 1; k <= n - 1; ++k) {
            const RPoly& g = d.gs[k - 1];
            if (g.is_zero()) continue;
            for (int j = 0; j < k; ++j)
                if (g.max_exp(j) > 0)
                    throw std::invalid_argument("exponent r_" + std::to_string(j) +
                                                " too small for layer " + std::to_string(k));
        }
        if (!d.gs[n - 1].is_zero()) {
            for (int j = 0; j <= n - 2; ++j)
                if (d.gs[n - 1].max_exp(j) > 0)
                    throw std::invalid_argument("exponent r_" + std::to_string(j) +
                                                " too small for the top layer");
            if (d.gs[n - 1].min_exp(n - 1) < 0)
                throw std::invalid_argument("exponent r_" + std::to_string(n - 1) +
                                            " too small for the top layer");
        }
    }

    RPoly rebuild = RPoly::constant(c.ring, nind, Rat(1), true);
    if (!d.f0.is_zero()) {
        ExpVec s(nind, 0);
        s[0] = 1;
        rebuild = add(rebuild, shift(d.f0, s));
    }
    for (int k = 1; k <= n - 1; ++k) {
        if (d.gs[k - 1].is_zero()) continue;
        ExpVec s(nind, 0);
        for (int j = 0; j < k; ++j) s[j] = static_cast<int>(d.rs[j]);
        s[k] = 1;
        rebuild = add(rebuild, shift(d.gs[k - 1], s));
    }
    if (n >= 1 && !d.gs[n - 1].is_zero()) {
        ExpVec s(nind, 0);
        for (int j = 0; j <= n - 2; ++j) s[j] = static_cast<int>(d.rs[j]);
        s[n - 1] += static_cast<int>(-d.rs[n - 1]);
        s[n] = 1;
        rebuild = add(rebuild, shift(d.gs[n - 1], s));
    }
    if (!equal(rebuild, divided))
        throw std::logic_error("layered form does not rebuild the divided witness");
    return d;
}

namespace {

ExpVec unit_exp(int len, int slot) {
    ExpVec e(len, 0);
    e[slot] = 1;
    return e;
}

// rewrites a layer polynomial into certificate indicators; image[slot] gives
// the exponent contribution of one unit of that slot, an empty image forbids
// the slot
RPoly to_cert_vars(const RPoly& g, int cert_nind, const std::vector<ExpVec>& image,
                   bool negate) {
    RPoly out = RPoly::zero(g.ring, cert_nind);
    for (const auto& [e, coeff] : g.terms) {
        ExpVec ce(cert_nind, 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 || image[i].empty())
                throw std::logic_error("uncleared exponent while assembling a step certificate");
            for (int v = 0; v < cert_nind; ++v) ce[v] += e[i] * image[i][v];
        }
        out.insert_term(ce, negate ? valdim::neg(coeff) : coeff);
    }
    return out;
}

}  // namespace

ComplementaryChainV build_chain(const WitnessDecomposition& d, long p_bound, long deg_bound) {
    const RingPtr& S = d.cert.ring;
    const int n = static_cast<int>(d.cert.points.size()) - 1;
    if (n < 0) throw std::invalid_argument("empty point tuple");

    ComplementaryChainV ch;
    ch.ring = S;
    ch.oracle = std::make_shared<ValuativeOracle>(S, p_bound, deg_bound);
    for (const auto& pt : d.cert.points) ch.xs.push_back(FracElement::whole(pt));
    for (const auto& x : ch.xs) ch.x_atoms.push_back(ch.oracle->intern(x));

    auto run_check = [&]() {
        ch.check = check_complementary(ch.x_atoms, ch.us, *ch.oracle);
        if (ch.check.status != Tri::Proved)
            throw std::logic_error("complementary sequence failed its check");
    };

    // a zero point (or the trivial ring, where all points are zero) cuts the
    // sequence: tops before the last zero entry, bottoms after, the crossing
    // inequality discharged by the zero atom
    int last_zero = -1;
    for (int i = 0; i <= n; ++i)
        if (d.cert.points[i].is_zero()) last_zero = i;
    if (last_zero >= 0) {
        ch.us.assign(n + 1, LatticeTerm::top());
        for (int k = last_zero + 1; k <= n; ++k) ch.us[k] = LatticeTerm::bottom();
        ch.steps.assign(n + 2, ChainStep{});
        ch.steps[last_zero + 1].kind = ChainStep::Kind::ZeroAtom;
        run_check();
        return ch;
    }

    const std::vector<FracElement>& fx = ch.xs;
    if (n == 1) {
        ch.ys.push_back(div(ch.xs[1], pow(ch.xs[0], d.rs[0])));
    } else if (n >= 2) {
        FracElement one_f = FracElement::whole(RingElement::one(S));
        ch.ys.push_back(div(add(one_f, mul(ch.xs[0], evaluate(d.f0, fx))),
                            pow(ch.xs[0], d.rs[0])));
        for (int k = 1; k <= n - 2; ++k)
            ch.ys.push_back(div(add(ch.ys[k - 1], mul(ch.xs[k], evaluate(d.gs[k - 1], fx))),
                                pow(ch.xs[k], d.rs[k])));
        ch.ys.push_back(div(ch.xs[n], pow(ch.xs[n - 1], d.rs[n - 1])));
    }
    std::vector<int> ya(static_cast<size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) ya[k] = ch.oracle->intern(ch.ys[k]);

    ch.us.assign(n + 1, LatticeTerm::bottom());
    if (n >= 1) {
        ch.us[0] = LatticeTerm::atom(ya[0]);
        for (int k = 1; k <= n - 2; ++k) {
            std::vector<int> meets{ya[k]};
            for (int j = 0; j < k; ++j) meets.push_back(ch.x_atoms[j]);
            ch.us[k] = LatticeTerm::meet_of(std::move(meets));
        }
        if (n >= 2) ch.us[n - 1] = LatticeTerm::atom(ya[n - 1]);
    }

    ch.steps.assign(n + 2, ChainStep{});
    auto attach = [&](int entry, std::vector<int> lhs, std::vector<int> rhs, ValCert cert) {
        for (int a : lhs)
            if (std::find(rhs.begin(), rhs.end(), a) != rhs.end()) return;  // syntactic
        VerifyReport vrep = verify_val_cert(cert, S);
        if (!vrep.ok)
            throw std::logic_error("step certificate failed to verify: " + vrep.diagnostic);
        ch.oracle->add_hint(std::move(lhs), std::move(rhs), cert);
        ch.steps[entry] = ChainStep{ChainStep::Kind::ValCert, std::move(cert)};
    };

    const int nind = n + 1;
    if (n == 0) {
        // ⊤ ≤ V′(x_0):  1 = x_0·(−f_0(X_0))
        ValCert c;
        c.right = {ch.xs[0]};
        std::vector<ExpVec> im(nind);
        im[0] = unit_exp(1, 0);
        c.polys = {to_cert_vars(d.f0, 1, im, true)};
        attach(0, {}, {ch.x_atoms[0]}, std::move(c));
        run_check();
        return ch;
    }

    {
        // ⊤ ≤ V′(x_0) ∨ V′(y_0)
        ValCert c;
        c.right = {ch.xs[0], ch.ys[0]};
        std::vector<ExpVec> imf(nind);
        imf[0] = unit_exp(2, 0);
        RPoly p1 = to_cert_vars(d.f0, 2, imf, true);
        RPoly p2 = RPoly::zero(S, 2);
        if (n == 1) {
            // 1 = x_0·(−f_0(X_0)) + y_0·(−g_1(X_0, X_1·X_0^{r_0}))
            if (!d.gs[0].is_zero()) {
                std::vector<ExpVec> img(nind);
                img[0] = unit_exp(2, 0);
                img[1] = ExpVec{static_cast<int>(d.rs[0]), 1};
                p2 = to_cert_vars(d.gs[0], 2, img, true);
            }
        } else {
            // 1 = x_0·(−f_0(X_0)) + y_0·X_0^{r_0}
            p2 = RPoly::monomial(S, 2, ExpVec{static_cast<int>(d.rs[0]), 0},
                                 RingElement::one(S));
        }
        c.polys = {std::move(p1), std::move(p2)};
        attach(0, {}, {ch.x_atoms[0], ya[0]}, std::move(c));
    }

    for (int k = 1; k <= n - 2; ++k) {
        // V′(x_{k-1}) ∧ u_{k-1} ≤ V′(x_k) ∨ u_k, genuine clause {x_k, y_k}:
        //   y_{k-1}·∏_{j<k} x_j^{M_j} = x_k·(−g_k·∏X^M) + y_k·(x_k^{r_k}·∏X^M)
        const RPoly& g = d.gs[k - 1];
        std::vector<long> M(static_cast<size_t>(k), 0);
        if (!g.is_zero())
            for (int j = 0; j < k; ++j)
                M[j] = std::max(0L, -static_cast<long>(g.min_exp(j)));
        ValCert c;
        c.right = {ch.xs[k], ch.ys[k]};
        c.left = {ch.ys[k - 1]};
        c.exponents = {1};
        for (int j = k - 1; j >= 0; --j) {
            c.left.push_back(ch.xs[j]);
            c.exponents.push_back(M[j]);
        }
        const int cn = k + 3;  // x_k, y_k, then the left atoms
        RPoly p1 = RPoly::zero(S, cn);
        if (!g.is_zero()) {
            ExpVec s(nind, 0);
            for (int j = 0; j < k; ++j) s[j] = static_cast<int>(M[j]);
            std::vector<ExpVec> im(nind);
            im[k] = unit_exp(cn, 0);
            for (int j = 0; j < k; ++j) im[j] = unit_exp(cn, k + 2 - j);
            p1 = to_cert_vars(shift(g, s), cn, im, true);
        }
        ExpVec pe(cn, 0);
        pe[0] = static_cast<int>(d.rs[k]);
        for (int j = 0; j < k; ++j) pe[k + 2 - j] = static_cast<int>(M[j]);
        RPoly p2 = RPoly::monomial(S, cn, pe, RingElement::one(S));
        c.polys = {std::move(p1), std::move(p2)};
        std::vector<int> lhs{ch.x_atoms[k - 1], ya[k - 1]};
        for (int j = 0; j < k - 1; ++j) lhs.push_back(ch.x_atoms[j]);
        attach(k, std::move(lhs), {ch.x_atoms[k], ya[k]}, std::move(c));
    }

    if (n >= 2) {
        // V′(x_{n-2}) ∧ u_{n-2} ≤ V′(x_{n-1}) ∨ V′(y_{n-1}):
        //   y_{n-2}·∏ x_j^{M_j} = x_{n-1}·(−g_{n-1}·∏X^M)
        //                         + y_{n-1}·(−g_n·∏X^M)|_{X_n ↦ X_{y}·X_{x}^{r_{n-1}}}
        const RPoly& ga = d.gs[n - 2];
        const RPoly& gb = d.gs[n - 1];
        std::vector<long> M(static_cast<size_t>(n - 1), 0);
        for (int j = 0; j <= n - 2; ++j) {
            long v = 0;
            if (!ga.is_zero()) v = std::max(v, -static_cast<long>(ga.min_exp(j)));
            if (!gb.is_zero()) v = std::max(v, -static_cast<long>(gb.min_exp(j)));
            M[j] = v;
        }
        ValCert c;
        c.right = {ch.xs[n - 1], ch.ys[n - 1]};
        c.left = {ch.ys[n - 2]};
        c.exponents = {1};
        for (int j = n - 2; j >= 0; --j) {
            c.left.push_back(ch.xs[j]);
            c.exponents.push_back(M[j]);
        }
        const int cn = n + 2;
        ExpVec s(nind, 0);
        for (int j = 0; j <= n - 2; ++j) s[j] = static_cast<int>(M[j]);
        std::vector<ExpVec> im(nind);
        for (int j = 0; j <= n - 2; ++j) im[j] = unit_exp(cn, n + 1 - j);
        im[n - 1] = unit_exp(cn, 0);
        RPoly p1 = ga.is_zero() ? RPoly::zero(S, cn) : to_cert_vars(shift(ga, s), cn, im, true);
        std::vector<ExpVec> im2 = im;
        im2[n] = ExpVec(cn, 0);
        im2[n][0] = static_cast<int>(d.rs[n - 1]);
        im2[n][1] = 1;
        RPoly p2 = gb.is_zero() ? RPoly::zero(S, cn) : to_cert_vars(shift(gb, s), cn, im2, true);
        c.polys = {std::move(p1), std::move(p2)};
        std::vector<int> lhs{ch.x_atoms[n - 2], ya[n - 2]};
        for (int j = 0; j < n - 2; ++j) lhs.push_back(ch.x_atoms[j]);
        attach(n - 1, std::move(lhs), {ch.x_atoms[n - 1], ya[n - 1]}, std::move(c));
    }

    {
        // V′(x_{n-1}) ∧ V′(y_{n-1}) ≤ V′(x_n):  y_{n-1}·x_{n-1}^{r_{n-1}} = x_n
        ValCert c;
        c.right = {ch.xs[n]};
        c.left = {ch.ys[n - 1], ch.xs[n - 1]};
        c.exponents = {1, d.rs[n - 1]};
        c.polys = {RPoly::constant(S, 3, Rat(1))};
        attach(n, {ch.x_atoms[n - 1], ya[n - 1]}, {ch.x_atoms[n]}, std::move(c));
    }

    run_check();
    return ch;
}

VdimToVdimOutcome vdim_to_Vdim(const RingPtr& ring, const std::vector<FracElement>& xs,
                               long degree_bound, long coeff_degree_bound, long p_bound,
                               long val_deg_bound) {
    if (!ring->assume_integral)
        throw std::invalid_argument("vdim_to_Vdim needs an assume_integral presentation");
    if (xs.empty()) throw std::invalid_argument("empty point tuple");
    for (const auto& x : xs) require_over(x, ring, "point");
    const int n = static_cast<int>(xs.size()) - 1;
    const int base_nv = ring->nvars();
    const int ext_nv = base_nv + n + 1;

    std::vector<std::string> vars = ring->vars;
    for (int i = 0; i <= n; ++i) {
        std::string name = "T" + std::to_string(i);
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw std::invalid_argument("variable name collision: " + name);
        vars.push_back(std::move(name));
    }
    std::vector<int> slot(static_cast<size_t>(base_nv));
    for (int i = 0; i < base_nv; ++i) slot[static_cast<size_t>(i)] = i;
    std::vector<Poly> gens;
    for (const Poly& g : ring->ideal_gens) gens.push_back(remap_vars(g, ext_nv, slot));
    Poly den_prod = Poly::constant(ring->field, ext_nv, Rat(1));
    for (int i = 0; i <= n; ++i) {
        Poly numi = remap_vars(xs[static_cast<size_t>(i)].num.repr, ext_nv, slot);
        Poly deni = remap_vars(xs[static_cast<size_t>(i)].den.repr, ext_nv, slot);
        Poly ti = Poly::variable(ring->field, ext_nv, base_nv + i);
        gens.push_back(sub(mul(deni, ti), numi));
        den_prod = mul(den_prod, deni);
    }
    if (!den_prod.is_constant())
        gens = saturation(ring->field, ext_nv, gens, den_prod);
    RingPtr sub_ring =
        RingPresentation::make(ring->field, vars, canonical_gens(ring->field, ext_nv, gens),
                               /*assume_reduced=*/true, /*assume_integral=*/true);

    VdimToVdimOutcome out;
    out.subring = sub_ring;

    std::vector<RingElement> points;
    for (int i = 0; i <= n; ++i) points.push_back(RingElement::variable(sub_ring, base_nv + i));

    std::vector<int> prio(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) prio[static_cast<size_t>(i)] = n - i;
    std::vector<bool> mask(static_cast<size_t>(ext_nv), false);
    for (int i = 0; i < base_nv; ++i) mask[static_cast<size_t>(i)] = true;

    out.search = search_dim_cert(sub_ring, points, OrderSpec::lex(prio), degree_bound,
                                 coeff_degree_bound, mask);
    if (!out.search.cert) return out;

    bool degenerate = sub_ring->is_trivial();
    for (const auto& pt : points)
        if (pt.is_zero()) degenerate = true;
    if (degenerate) {
        WitnessDecomposition d;
        d.cert = *out.search.cert;
        out.chain = build_chain(d, p_bound, val_deg_bound);
        return out;
    }
    out.decomposition = decompose_witness(*out.search.cert);
    out.chain = build_chain(*out.decomposition, p_bound, val_deg_bound);
    return out;
}

}  // namespace valdim
