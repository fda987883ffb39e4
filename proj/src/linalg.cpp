#include "lodual/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lodual {

namespace {

// Integer sparse row: (column, coefficient) sorted by column, content-reduced.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void reduce_content(IntRow& row) {
    if (row.empty())
        return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    if (g > 1)
        for (auto& [c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a_coeff * a - b_coeff * b, gcd-reduced.
IntRow combine(const mpz_class& a_coeff, const IntRow& a, const mpz_class& b_coeff, const IntRow& b) {
    IntRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, a_coeff * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -b_coeff * b[j].second);
            ++j;
        } else {
            mpz_class v = a_coeff * a[i].second - b_coeff * b[j].second;
            if (v != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    reduce_content(out);
    return out;
}

// Clear denominators and divide out the content.
std::vector<IntRow> integer_rows(const SparseMatrix& m) {
    std::vector<IntRow> rows(m.rows());
    std::vector<mpz_class> lcm(m.rows(), 1);
    for (const auto& e : m.entries())
        mpz_lcm(lcm[e.row].get_mpz_t(), lcm[e.row].get_mpz_t(), e.value.denominator().get_mpz_t());
    for (const auto& e : m.entries()) {
        mpz_class v = e.value.numerator() * (lcm[e.row] / e.value.denominator());
        rows[e.row].emplace_back(e.col, std::move(v));
    }
    for (auto& r : rows)
        reduce_content(r);
    return rows;
}

} // namespace

RrefResult rref(const SparseMatrix& m) {
    std::vector<IntRow> work = integer_rows(m);
    std::vector<IntRow> done;    // echelon rows, increasing pivot column
    std::vector<std::size_t> pivots;

    // Forward pass: repeatedly pick the sparsest row with the leftmost
    // leading column and eliminate that column everywhere else.
    while (true) {
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (work[i].empty())
                continue;
            if (best == work.size() || work[i].front().first < work[best].front().first ||
                (work[i].front().first == work[best].front().first && work[i].size() < work[best].size()))
                best = i;
        }
        if (best == work.size())
            break;
        IntRow pivot_row = std::move(work[best]);
        work.erase(work.begin() + static_cast<long>(best));
        const std::size_t col = pivot_row.front().first;
        const mpz_class& lead = pivot_row.front().second;
        for (auto& row : work) {
            if (row.empty())
                continue;
            auto it = std::lower_bound(row.begin(), row.end(), col,
                                       [](const auto& p, std::size_t c) { return p.first < c; });
            if (it != row.end() && it->first == col)
                row = combine(lead, row, it->second, pivot_row);
        }
        pivots.push_back(col);
        done.push_back(std::move(pivot_row));
    }

    // Back substitution, still fraction-free.
    for (std::size_t i = done.size(); i-- > 0;) {
        const std::size_t col = pivots[i];
        const mpz_class& lead = done[i].front().second;
        for (std::size_t j = 0; j < i; ++j) {
            auto& row = done[j];
            auto it = std::lower_bound(row.begin(), row.end(), col,
                                       [](const auto& p, std::size_t c) { return p.first < c; });
            if (it != row.end() && it->first == col)
                row = combine(lead, row, it->second, done[i]);
        }
    }

    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < done.size(); ++i) {
        Rational inv = Rational(mpq_class(done[i].front().second)).inverse();
        for (const auto& [c, v] : done[i])
            entries.push_back({i, c, Rational(mpq_class(v)) * inv});
    }
    RrefResult result;
    result.rank = done.size();
    result.pivots = std::move(pivots);
    result.reduced = SparseMatrix(m.rows(), m.cols(), std::move(entries));
    return result;
}

std::size_t rank_of(const SparseMatrix& m) {
    return rref(m).rank;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    basis.reserve(m.cols() - r.rank);
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = Rational(1);
        for (std::size_t i = 0; i < r.rank; ++i) {
            Rational c = r.reduced.at(i, f);
            if (!c.is_zero())
                v[r.pivots[i]] = -c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMatrix kernel_matrix(const SparseMatrix& m) {
    return SparseMatrix::from_columns(m.cols(), kernel_basis(m));
}

QuotientSpace quotient_basis(const SparseMatrix& sub, std::size_t ambient_dim) {
    if (sub.rows() != ambient_dim)
        throw std::invalid_argument("quotient_basis: sub must have ambient_dim rows");
    RrefResult r = rref(sub.transpose());
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;

    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    q.dim = ambient_dim - r.rank;
    std::vector<MatrixEntry> proj;
    for (std::size_t j = 0, out = 0; j < ambient_dim; ++j) {
        if (is_pivot[j])
            continue;
        q.representative_cols.push_back(j);
        proj.push_back({out, j, Rational(1)});
        for (std::size_t i = 0; i < r.rank; ++i) {
            Rational c = r.reduced.at(i, j);
            if (!c.is_zero())
                proj.push_back({out, r.pivots[i], -c});
        }
        ++out;
    }
    q.projection = SparseMatrix(q.dim, ambient_dim, std::move(proj));
    return q;
}

std::optional<SparseMatrix> solve(const SparseMatrix& m, const SparseMatrix& rhs) {
    if (m.rows() != rhs.rows())
        throw std::invalid_argument("solve: row mismatch");
    RrefResult r = rref(m.augment_columns(rhs));
    for (std::size_t p : r.pivots)
        if (p >= m.cols())
            return std::nullopt;
    std::vector<MatrixEntry> xs;
    for (const auto& e : r.reduced.entries()) {
        if (e.col < m.cols() || e.row >= r.rank)
            continue;
        xs.push_back({r.pivots[e.row], e.col - m.cols(), e.value});
    }
    return SparseMatrix(m.cols(), rhs.cols(), std::move(xs));
}

std::vector<Rational> Subquotient::coords(const std::vector<Rational>& cycle) const {
    auto x = solve(cycles, SparseMatrix::from_columns(chain_dim, {cycle}));
    if (!x)
        throw std::logic_error("Subquotient: vector is not a cycle");
    std::vector<Rational> k(cycles.cols(), Rational(0));
    for (const auto& e : x->entries())
        k[e.row] = e.value;
    return projection.apply(k);
}

std::vector<Rational> Subquotient::representative(std::size_t i) const {
    if (i >= rep_cols.size())
        throw std::out_of_range("Subquotient: class index out of range");
    return cycles.column(rep_cols[i]);
}

Subquotient subquotient(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("subquotient: boundary dimensions mismatch");
    Subquotient h;
    h.chain_dim = d_out.cols();
    h.cycles = kernel_matrix(d_out);
    auto img = solve(h.cycles, d_in);
    if (!img)
        throw std::logic_error("subquotient: image not contained in kernel (d*d != 0?)");
    QuotientSpace q = quotient_basis(*img, h.cycles.cols());
    h.dim = q.dim;
    h.projection = q.projection;
    h.rep_cols = q.representative_cols;
    return h;
}

std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_dim: boundary dimensions mismatch");
    return (d_out.cols() - rank_of(d_out)) - rank_of(d_in);
}

} // namespace lodual
