#include "valdim/linalg.hpp"

#include <stdexcept>

namespace valdim {

std::optional<std::vector<Rat>> solve_canonical(const Field& field,
                                                std::vector<std::vector<Rat>> a,
                                                std::vector<Rat> b) {
    size_t nrows = a.size();
    if (b.size() != nrows) throw std::invalid_argument("rhs length mismatch");
    size_t ncols = nrows == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");

    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < nrows; ++c) {
        size_t p = r;
        while (p < nrows && a[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = field.inv(a[r][c]);
        for (size_t j = c; j < ncols; ++j) a[r][j] = field.mul(a[r][j], inv);
        b[r] = field.mul(b[r], inv);
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat factor = a[i][c];
            for (size_t j = c; j < ncols; ++j)
                a[i][j] = field.sub(a[i][j], field.mul(factor, a[r][j]));
            b[i] = field.sub(b[i], field.mul(factor, b[r]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < nrows; ++i)
        if (b[i] != 0) return std::nullopt;

    std::vector<Rat> x(ncols, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

}  // namespace valdim
