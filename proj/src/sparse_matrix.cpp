#include "lodual/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lodual {

namespace {
bool entry_order(const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}
} // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols) {
    for (const auto& e : entries)
        if (e.row >= rows || e.col >= cols)
            throw std::invalid_argument("SparseMatrix: entry out of range");
    std::sort(entries.begin(), entries.end(), entry_order);
    entries_.reserve(entries.size());
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
            entries_.back().value += e.value;
        else
            entries_.push_back(std::move(e));
    }
    std::erase_if(entries_, [](const MatrixEntry& e) { return e.value.is_zero(); });
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    std::vector<MatrixEntry> es;
    es.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({i, i, Rational(1)});
    return SparseMatrix(n, n, std::move(es));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    std::vector<MatrixEntry> es;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc)
            throw std::invalid_argument("SparseMatrix: ragged dense input");
        for (std::size_t j = 0; j < nc; ++j)
            if (!rows[i][j].is_zero())
                es.push_back({i, j, rows[i][j]});
    }
    return SparseMatrix(rows.size(), nc, std::move(es));
}

SparseMatrix SparseMatrix::from_columns(std::size_t dim, const std::vector<std::vector<Rational>>& cols) {
    std::vector<MatrixEntry> es;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != dim)
            throw std::invalid_argument("SparseMatrix: column of wrong dimension");
        for (std::size_t i = 0; i < dim; ++i)
            if (!cols[j][i].is_zero())
                es.push_back({i, j, cols[j][i]});
    }
    return SparseMatrix(dim, cols.size(), std::move(es));
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
    MatrixEntry probe{r, c, Rational(0)};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe, entry_order);
    if (it != entries_.end() && it->row == r && it->col == c)
        return it->value;
    return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<MatrixEntry> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_)
        es.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(es));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
    // Row-major accumulation: group lhs by row, rhs by row (= lhs column index).
    std::vector<std::size_t> rhs_row_begin(rhs.rows_ + 1, rhs.entries_.size());
    for (std::size_t k = rhs.entries_.size(); k-- > 0;)
        rhs_row_begin[rhs.entries_[k].row] = k;
    for (std::size_t r = rhs.rows_; r-- > 0;)
        if (rhs_row_begin[r] == rhs.entries_.size() && r + 1 <= rhs.rows_)
            rhs_row_begin[r] = rhs_row_begin[r + 1];

    std::vector<MatrixEntry> out;
    std::vector<Rational> acc(rhs.cols_, Rational(0));
    std::vector<bool> used(rhs.cols_, false);
    std::size_t i = 0;
    while (i < entries_.size()) {
        std::size_t row = entries_[i].row;
        std::vector<std::size_t> touched;
        for (; i < entries_.size() && entries_[i].row == row; ++i) {
            const auto& le = entries_[i];
            for (std::size_t k = rhs_row_begin[le.col]; k < rhs_row_begin[le.col + 1]; ++k) {
                const auto& re = rhs.entries_[k];
                if (!used[re.col]) {
                    used[re.col] = true;
                    acc[re.col] = Rational(0);
                    touched.push_back(re.col);
                }
                acc[re.col] += le.value * re.value;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::size_t c : touched) {
            if (!acc[c].is_zero())
                out.push_back({row, c, acc[c]});
            used[c] = false;
        }
    }
    return SparseMatrix(rows_, rhs.cols_, std::move(out));
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("SparseMatrix: dimension mismatch in sum");
    std::vector<MatrixEntry> es = entries_;
    es.insert(es.end(), rhs.entries_.begin(), rhs.entries_.end());
    return SparseMatrix(rows_, cols_, std::move(es));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
    return *this + rhs.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
    if (c.is_zero())
        return SparseMatrix(rows_, cols_);
    std::vector<MatrixEntry> es = entries_;
    for (auto& e : es)
        e.value *= c;
    return SparseMatrix(rows_, cols_, std::move(es));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        const auto& x = a.entries_[i];
        const auto& y = b.entries_[i];
        if (x.row != y.row || x.col != y.col || x.value != y.value)
            return false;
    }
    return true;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("SparseMatrix: vector of wrong dimension");
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& e : entries_)
        out[e.row] += e.value * v[e.col];
    return out;
}

std::vector<Rational> SparseMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& e : entries_)
        if (e.col == c)
            out[e.row] = e.value;
    return out;
}

SparseMatrix SparseMatrix::augment_columns(const SparseMatrix& right) const {
    if (rows_ != right.rows_)
        throw std::invalid_argument("SparseMatrix: row mismatch in augment");
    std::vector<MatrixEntry> es = entries_;
    es.reserve(es.size() + right.entries_.size());
    for (const auto& e : right.entries_)
        es.push_back({e.row, e.col + cols_, e.value});
    return SparseMatrix(rows_, cols_ + right.cols_, std::move(es));
}

} // namespace lodual
