#include "valdim/order.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace valdim {

namespace {

Rat det_rational(const std::vector<std::vector<long>>& rows) {
    size_t n = rows.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(rows[i][j]);
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

}  // namespace

int OrderSpec::dim() const {
    if (kind == Kind::Lex) return static_cast<int>(priority.size());
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
}

bool OrderSpec::graded() const {
    if (kind != Kind::Matrix) return false;
    for (long x : rows.front())
        if (x != 1) return false;
    return true;
}

void OrderSpec::validate() const {
    if (kind == Kind::Lex) {
        int n = static_cast<int>(priority.size());
        if (n == 0) throw std::invalid_argument("empty lex priority");
        std::vector<bool> seen(n, false);
        for (int i : priority) {
            if (i < 0 || i >= n || seen[i])
                throw std::invalid_argument("lex priority is not a permutation");
            seen[i] = true;
        }
        return;
    }
    size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("empty order matrix");
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("order matrix is not square");
        for (long x : row)
            if (x < 0) throw std::invalid_argument("order matrix entries must be nonnegative");
    }
    for (long x : rows.front())
        if (x <= 0) throw std::invalid_argument("order matrix first row must be positive");
    if (det_rational(rows) == 0)
        throw std::invalid_argument("order matrix must be invertible over the rationals");
}

OrderSpec OrderSpec::lex(std::vector<int> priority) {
    OrderSpec o;
    o.kind = Kind::Lex;
    o.priority = std::move(priority);
    o.validate();
    return o;
}

OrderSpec OrderSpec::matrix(std::vector<std::vector<long>> rows) {
    OrderSpec o;
    o.kind = Kind::Matrix;
    o.rows = std::move(rows);
    o.validate();
    return o;
}

OrderSpec OrderSpec::grlex(int n) {
    if (n < 1) throw std::invalid_argument("grlex needs at least one variable");
    std::vector<std::vector<long>> rows;
    rows.emplace_back(n, 1);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> row(n, 0);
        row[i] = 1;
        rows.push_back(std::move(row));
    }
    OrderSpec o;
    o.kind = Kind::Matrix;
    o.rows = std::move(rows);
    return o;
}

Cmp compare(const ExpVec& e, const ExpVec& f, const OrderSpec& o) {
    if (static_cast<int>(e.size()) != o.dim() || static_cast<int>(f.size()) != o.dim())
        throw std::invalid_argument("exponent vector does not match order dimension");
    if (o.kind == OrderSpec::Kind::Lex) {
        for (int i : o.priority) {
            if (e[i] != f[i]) return e[i] < f[i] ? Cmp::Less : Cmp::Greater;
        }
        return Cmp::Equal;
    }
    for (const auto& row : o.rows) {
        long le = 0, lf = 0;
        for (size_t j = 0; j < row.size(); ++j) {
            le += row[j] * e[j];
            lf += row[j] * f[j];
        }
        if (le != lf) return le < lf ? Cmp::Less : Cmp::Greater;
    }
    return Cmp::Equal;
}

namespace {

std::pair<ExpVec, Rat> extreme_term(const Poly& p, const OrderSpec& o, bool want_min) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no extreme term");
    const std::pair<const ExpVec, Rat>* best = nullptr;
    for (const auto& t : p.terms) {
        if (!best) {
            best = &t;
            continue;
        }
        Cmp c = compare(t.first, best->first, o);
        if ((want_min && c == Cmp::Less) || (!want_min && c == Cmp::Greater)) best = &t;
    }
    return {best->first, best->second};
}

}  // namespace

std::pair<ExpVec, Rat> trailing_term(const Poly& p, const OrderSpec& o) {
    return extreme_term(p, o, true);
}

std::pair<ExpVec, Rat> leading_term(const Poly& p, const OrderSpec& o) {
    return extreme_term(p, o, false);
}

std::vector<ExpVec> ascending_monomials(int nvars, long degree_bound, const OrderSpec& o) {
    if (o.dim() != nvars) throw std::invalid_argument("order dimension mismatch");
    std::vector<ExpVec> all;
    ExpVec e(nvars, 0);
    std::function<void(int, long)> gen = [&](int i, long left) {
        if (i == nvars) {
            all.push_back(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[i] = d;
            gen(i + 1, left - d);
        }
        e[i] = 0;
    };
    gen(0, degree_bound);
    std::sort(all.begin(), all.end(),
              [&](const ExpVec& a, const ExpVec& b) { return compare(a, b, o) == Cmp::Less; });
    return all;
}

}  // namespace valdim
