#ifndef LODUAL_SPARSE_MATRIX_HPP
#define LODUAL_SPARSE_MATRIX_HPP

#include "lodual/rational.hpp"

#include <cstddef>
#include <vector>

namespace lodual {

struct MatrixEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational value;
};

/// Immutable sparse matrix over Q in triplet form. Entries are kept in
/// canonical row-major sorted order with no zero values and no duplicate
/// positions; the constructor normalizes arbitrary triplet input.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
    static SparseMatrix from_columns(std::size_t dim, const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<MatrixEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Rational at(std::size_t r, std::size_t c) const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix scaled(const Rational& c) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(std::size_t c) const;

    /// Stack columns of `right` after the columns of `*this` (same row count).
    SparseMatrix augment_columns(const SparseMatrix& right) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

} // namespace lodual

#endif
