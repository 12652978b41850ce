#ifndef HOPFSEQ_LINALG_HPP
#define HOPFSEQ_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfseq/rational.hpp"

namespace hopfseq {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>; // dense, row-major

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<size_t> rref(QMat& m);

size_t rank(QMat m);

Rat determinant(QMat m);

// Canonical basis of {x : m x = 0} with x of length cols: one vector per free
// column (ascending), free coordinate 1 and the other free coordinates 0.
std::vector<QVec> kernel_basis(QMat m, size_t cols);

// Any solution of m x = rhs, or nullopt when inconsistent.
std::optional<QVec> solve(QMat m, QVec rhs);

// Inverse of a square matrix, or nullopt when singular.
std::optional<QMat> inverse(QMat m);

QVec matvec(const QMat& m, const QVec& x);

// Incremental row space over Q. Rows are kept mutually reduced, so insertion
// and membership are single elimination passes.
class RowSpan {
  public:
    explicit RowSpan(size_t cols) : cols_(cols) {}

    // Returns true (and absorbs v) iff v is independent of the current span.
    bool insert(QVec v);
    bool contains(QVec v) const;
    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

  private:
    void reduce(QVec& v) const;

    size_t cols_;
    std::vector<std::pair<size_t, QVec>> rows_; // (pivot column, row), pivots normalized to 1
};

} // namespace hopfseq

#endif
