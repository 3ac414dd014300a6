#include "hoc/linalg.hpp"

#include <stdexcept>

namespace hoc {

std::vector<RationalVector> null_space(const RationalMatrix& rows) {
    if (rows.empty()) return {};
    size_t m = rows.size(), n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("null_space: ragged matrix");

    RationalMatrix a = rows;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[row], a[piv]);
        Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < n; ++j) a[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RationalVector v(n, Rational(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hoc
