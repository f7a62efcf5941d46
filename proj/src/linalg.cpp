#include "gainv/linalg.hpp"

namespace gainv {

std::vector<size_t> rref(FqMatrix& mat, const Field& k) {
    std::vector<size_t> pivots;
    if (mat.empty()) return pivots;
    size_t ncols = mat[0].size();
    size_t prow = 0;
    for (size_t col = 0; col < ncols && prow < mat.size(); ++col) {
        size_t sel = prow;
        while (sel < mat.size() && mat[sel][col].is_zero()) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[prow], mat[sel]);
        Fq inv = mat[prow][col].inverse();
        for (size_t j = col; j < ncols; ++j) mat[prow][j] = mat[prow][j] * inv;
        for (size_t r = 0; r < mat.size(); ++r) {
            if (r == prow || mat[r][col].is_zero()) continue;
            Fq f = mat[r][col];
            for (size_t j = col; j < ncols; ++j)
                mat[r][j] = mat[r][j] - f * mat[prow][j];
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

size_t rank(FqMatrix mat, const Field& k) { return rref(mat, k).size(); }

std::vector<FqRow> kernel_basis(FqMatrix mat, size_t ncols, const Field& k) {
    if (mat.empty()) mat.push_back(FqRow(ncols, k.zero()));
    auto pivots = rref(mat, k);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<FqRow> basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        FqRow v(ncols, k.zero());
        v[free] = k.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -mat[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FqRow> solve(FqMatrix a, FqRow b, const Field& k) {
    size_t ncols = a.empty() ? 0 : a[0].size();
    for (size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    auto pivots = rref(a, k);
    // inconsistent iff a pivot lands in the appended column
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    FqRow x(ncols, k.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
    return x;
}

}  // namespace gainv
