#include "valdim/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace valdim {

long total_degree(const ExpVec& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool exp_leq(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool exp_nonneg(const ExpVec& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

Poly Poly::zero(const Field& f, int nvars, bool laurent) {
    Poly p;
    p.field = f;
    p.nvars = nvars;
    p.laurent = laurent;
    return p;
}

Poly Poly::constant(const Field& f, int nvars, const Rat& c, bool laurent) {
    Poly p = zero(f, nvars, laurent);
    Rat v = f.normalize(c);
    if (v != 0) p.terms.emplace(ExpVec(nvars, 0), v);
    return p;
}

Poly Poly::variable(const Field& f, int nvars, int i, bool laurent) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p = zero(f, nvars, laurent);
    ExpVec e(nvars, 0);
    e[i] = 1;
    p.terms.emplace(e, Rat(1));
    return p;
}

Poly Poly::monomial(const Field& f, int nvars, const ExpVec& e, const Rat& c, bool laurent) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    if (!laurent && !exp_nonneg(e))
        throw std::invalid_argument("negative exponent in non-Laurent polynomial");
    Poly p = zero(f, nvars, laurent);
    Rat v = f.normalize(c);
    if (v != 0) p.terms.emplace(e, v);
    return p;
}

bool Poly::is_constant() const {
    if (terms.empty()) return true;
    return terms.size() == 1 && terms.begin()->first == ExpVec(nvars, 0);
}

Rat Poly::constant_value() const {
    auto it = terms.find(ExpVec(nvars, 0));
    return it == terms.end() ? Rat(0) : it->second;
}

long Poly::degree() const {
    if (terms.empty()) return -1;
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms) {
        long t = total_degree(e);
        if (first || t > d) d = t;
        first = false;
    }
    return d;
}

void Poly::insert_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    if (!laurent && !exp_nonneg(e))
        throw std::invalid_argument("negative exponent in non-Laurent polynomial");
    auto it = terms.find(e);
    if (it == terms.end()) {
        Rat v = field.normalize(c);
        if (v != 0) terms.emplace(e, v);
    } else {
        it->second = field.add(it->second, c);
        if (it->second == 0) terms.erase(it);
    }
}

namespace {

void check_compatible(const Poly& a, const Poly& b) {
    require_same_field(a.field, b.field);
    if (a.nvars != b.nvars) throw std::invalid_argument("polynomial variable count mismatch");
}

}  // namespace

Poly add(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r = a;
    r.laurent = a.laurent || b.laurent;
    for (const auto& [e, c] : b.terms) r.insert_term(e, c);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r = a;
    r.laurent = a.laurent || b.laurent;
    for (const auto& [e, c] : b.terms) r.insert_term(e, a.field.neg(c));
    return r;
}

Poly neg(const Poly& a) {
    Poly r = a;
    for (auto& [e, c] : r.terms) c = a.field.neg(c);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r = Poly::zero(a.field, a.nvars, a.laurent || b.laurent);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) r.insert_term(exp_add(ea, eb), a.field.mul(ca, cb));
    return r;
}

Poly scale(const Poly& a, const Rat& c) {
    Rat v = a.field.normalize(c);
    Poly r = Poly::zero(a.field, a.nvars, a.laurent);
    if (v == 0) return r;
    for (const auto& [e, ac] : a.terms) r.terms.emplace(e, a.field.mul(ac, v));
    return r;
}

Poly pow(const Poly& a, long k) {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(a.field, a.nvars, 1, a.laurent);
    Poly base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return r;
}

bool equal(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    return a.terms == b.terms;
}

Poly remap_vars(const Poly& a, int new_nvars, const std::vector<int>& slot) {
    if (static_cast<int>(slot.size()) != a.nvars)
        throw std::invalid_argument("variable remap length mismatch");
    Poly r = Poly::zero(a.field, new_nvars, a.laurent);
    for (const auto& [e, c] : a.terms) {
        ExpVec ne(new_nvars, 0);
        for (int i = 0; i < a.nvars; ++i) {
            if (e[i] == 0) continue;
            if (slot[i] < 0 || slot[i] >= new_nvars)
                throw std::invalid_argument("variable remap target out of range");
            ne[slot[i]] += e[i];
        }
        r.insert_term(ne, c);
    }
    return r;
}

namespace {

// grlex with variable 0 most significant, used only for stable printing
bool print_order_less(const ExpVec& a, const ExpVec& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::string coeff_string(const Field& f, const Rat& c) { return f.to_string(c); }

}  // namespace

std::string to_string(const Poly& a, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != a.nvars)
        throw std::invalid_argument("variable name list length mismatch");
    if (a.terms.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Rat>*> ts;
    ts.reserve(a.terms.size());
    for (const auto& t : a.terms) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](const auto* x, const auto* y) { return print_order_less(y->first, x->first); });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : ts) {
        const ExpVec& e = t->first;
        Rat c = t->second;
        bool negative = c < 0 && a.field.is_rationals();
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (negative) c = -c;
        bool has_vars = false;
        for (int x : e)
            if (x != 0) has_vars = true;
        std::string cs = coeff_string(a.field, c);
        if (!has_vars) {
            out << cs;
        } else {
            bool printed = false;
            if (cs != "1") {
                out << cs;
                printed = true;
            }
            for (int i = 0; i < a.nvars; ++i) {
                if (e[i] == 0) continue;
                if (printed) out << "*";
                out << vars[i];
                if (e[i] != 1) out << "^" << e[i];
                printed = true;
            }
        }
    }
    return out.str();
}

}  // namespace valdim
