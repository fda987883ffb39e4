#include "doctest.h"

#include "lodual/linalg.hpp"

#include <random>

using namespace lodual;

namespace {

SparseMatrix dense(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> rs;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (int v : r)
            row.emplace_back(v);
        rs.push_back(std::move(row));
    }
    return SparseMatrix::from_dense(rs);
}

bool is_zero_vec(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

// Deterministic small random rational matrices for the property checks.
SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::vector<MatrixEntry> es;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            unsigned r = rng() % 8;
            if (r < 4)
                continue;
            long num = static_cast<long>(rng() % 9) - 4;
            long den = 1 + static_cast<long>(rng() % 3);
            if (num != 0)
                es.push_back({i, j, Rational(num, den)});
        }
    return SparseMatrix(rows, cols, std::move(es));
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    Rational a(2, 4);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    Rational b(-3, -6); // normalizes to 1/2
    CHECK(b == a);
    CHECK((a + b) == Rational(1));
    CHECK((a * Rational(2, 3)) == Rational(1, 3));
    CHECK(Rational("7/21") == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), std::domain_error);
}

TEST_CASE("sparse matrix canonical form") {
    SparseMatrix m(2, 2, {{0, 1, Rational(2)}, {0, 1, Rational(-2)}, {1, 0, Rational(3)}});
    CHECK(m.entries().size() == 1); // duplicates merged, zero dropped
    CHECK(m.at(1, 0) == Rational(3));
    CHECK(m.at(0, 1) == Rational(0));
    CHECK_THROWS_AS(SparseMatrix(1, 1, {{0, 1, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("rref identity and proportional rows") {
    auto r1 = rref(SparseMatrix::identity(2));
    CHECK(r1.rank == 2);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r1.reduced == SparseMatrix::identity(2));

    auto r2 = rref(dense({{1, 2}, {2, 4}}));
    CHECK(r2.rank == 1);
}

TEST_CASE("rref hand-reduced 3x3") {
    // [[1,1,0],[0,1,1],[1,0,-1]]: row3 = row1 - row2, so rank 2.
    auto r = rref(dense({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    // Unique RREF: [[1,0,-1],[0,1,1],[0,0,0]]
    CHECK(r.reduced == dense({{1, 0, -1}, {0, 1, 1}, {0, 0, 0}}));
}

TEST_CASE("rref is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SparseMatrix m = random_matrix(rng, 5, 7);
        auto r = rref(m);
        auto r2 = rref(r.reduced);
        CHECK(r2.reduced == r.reduced);
        CHECK(r2.rank == r.rank);
    }
}

TEST_CASE("kernel basis spans the null space exactly") {
    CHECK(kernel_basis(SparseMatrix::identity(3)).empty());
    CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);

    auto kb = kernel_basis(dense({{1, 2}, {2, 4}}));
    REQUIRE(kb.size() == 1);
    // proportional to (2, -1): v0 * (-1) = v1 * 2
    CHECK(kb[0][0] * Rational(-1) == kb[0][1] * Rational(2));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SparseMatrix m = random_matrix(rng, 4, 6);
        auto r = rref(m);
        auto basis = kernel_basis(m);
        CHECK(r.rank + basis.size() == m.cols()); // rank-nullity
        for (const auto& v : basis)
            CHECK(is_zero_vec(m.apply(v))); // exact: m v = 0
        SparseMatrix packed = SparseMatrix::from_columns(m.cols(), basis);
        CHECK(rank_of(packed) == basis.size()); // independence
    }
}

TEST_CASE("quotient basis and projection") {
    // sub = 0: cokernel is everything
    auto q0 = quotient_basis(SparseMatrix(3, 0), 3);
    CHECK(q0.dim == 3);

    // sub spans ambient
    auto q1 = quotient_basis(SparseMatrix::identity(2), 2);
    CHECK(q1.dim == 0);

    // sub = column (1,2) in Q^2
    auto q2 = quotient_basis(SparseMatrix::from_columns(2, {{Rational(1), Rational(2)}}), 2);
    CHECK(q2.dim == 1);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        SparseMatrix sub = random_matrix(rng, 5, 3);
        auto q = quotient_basis(sub, 5);
        CHECK(q.dim == 5 - rank_of(sub));
        SparseMatrix composed = q.projection * sub;
        CHECK(composed.is_zero()); // projection o inclusion = 0
    }
}

TEST_CASE("solve finds exact solutions") {
    SparseMatrix m = dense({{1, 2}, {3, 4}});
    SparseMatrix b = SparseMatrix::from_columns(2, {{Rational(5), Rational(6)}});
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);

    // inconsistent: (1,2) and (2,4) rows with incompatible rhs
    SparseMatrix m2 = dense({{1, 2}, {2, 4}});
    SparseMatrix b2 = SparseMatrix::from_columns(2, {{Rational(1), Rational(3)}});
    CHECK_FALSE(solve(m2, b2).has_value());
}

TEST_CASE("subquotient homology bookkeeping") {
    // 0 -> Q^2 --d_out--> Q, d_out = (1 0); d_in = column (0,1) lands in kernel? no:
    // use d_in inside ker: d_out = (1 0): kernel = span e2; d_in = (0,1)^T column.
    SparseMatrix d_out = dense({{1, 0}});
    SparseMatrix d_in = SparseMatrix::from_columns(2, {{Rational(0), Rational(1)}});
    Subquotient h = subquotient(d_out, d_in);
    CHECK(h.dim == 0);

    SparseMatrix d_in_zero(2, 0);
    Subquotient h2 = subquotient(d_out, d_in_zero);
    CHECK(h2.dim == 1);
    auto rep = h2.representative(0);
    auto coords = h2.coords(rep);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == Rational(1));

    CHECK(homology_dim(d_out, d_in_zero) == 1);
}
