#include "hopfseq/linalg.hpp"

#include <algorithm>

#include "hopfseq/errors.hpp"

namespace hopfseq {

std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size();
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(QMat m) { return rref(m).size(); }

Rat determinant(QMat m) {
    size_t n = m.size();
    for (const QVec& row : m)
        if (row.size() != n) throw Error(Errc::invalid_argument, "determinant needs a square matrix");
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat factor = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

std::vector<QVec> kernel_basis(QMat m, size_t cols) {
    for (const QVec& row : m)
        if (row.size() != cols) throw Error(Errc::invalid_argument, "kernel_basis: ragged matrix");
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(QMat m, QVec rhs) {
    size_t rows = m.size();
    if (rhs.size() != rows) throw Error(Errc::invalid_argument, "solve: shape mismatch");
    size_t cols = rows == 0 ? 0 : m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    std::vector<size_t> pivots = rref(m);
    QVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the augmented column
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

std::optional<QMat> inverse(QMat m) {
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error(Errc::invalid_argument, "inverse needs a square matrix");
        for (size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n) return std::nullopt;
    QMat out(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

QVec matvec(const QMat& m, const QVec& x) {
    QVec out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw Error(Errc::invalid_argument, "matvec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j)
            if (m[i][j] != 0 && x[j] != 0) out[i] += m[i][j] * x[j];
    }
    return out;
}

void RowSpan::reduce(QVec& v) const {
    for (const auto& [pivot, row] : rows_) {
        if (v[pivot] == 0) continue;
        Rat factor = v[pivot];
        for (size_t j = 0; j < cols_; ++j)
            if (row[j] != 0) v[j] -= factor * row[j];
    }
}

bool RowSpan::insert(QVec v) {
    if (v.size() != cols_) throw Error(Errc::invalid_argument, "RowSpan: wrong width");
    reduce(v);
    size_t pivot = 0;
    while (pivot < cols_ && v[pivot] == 0) ++pivot;
    if (pivot == cols_) return false;
    Rat inv = 1 / v[pivot];
    for (size_t j = pivot; j < cols_; ++j) v[j] *= inv;
    for (auto& [_, row] : rows_) {
        if (row[pivot] == 0) continue;
        Rat factor = row[pivot];
        for (size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) row[j] -= factor * v[j];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
}

bool RowSpan::contains(QVec v) const {
    if (v.size() != cols_) throw Error(Errc::invalid_argument, "RowSpan: wrong width");
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

} // namespace hopfseq
