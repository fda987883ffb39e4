#ifndef LODUAL_LINALG_HPP
#define LODUAL_LINALG_HPP

#include "lodual/sparse_matrix.hpp"

#include <optional>
#include <vector>

namespace lodual {

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; // pivot column per pivot row, increasing
    SparseMatrix reduced;            // unique RREF, pivot rows first, zero rows padded
};

/// Reduced row-echelon form over Q. Elimination is fraction-free on
/// integer-cleared rows with gcd reduction after every combination; pivots
/// are normalized to 1 only at the end.
RrefResult rref(const SparseMatrix& m);

std::size_t rank_of(const SparseMatrix& m);

/// Basis of the null space {v : m v = 0}, one column per free column of the
/// RREF. Size is always cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

/// kernel_basis packed as the columns of a cols x (cols-rank) matrix.
SparseMatrix kernel_matrix(const SparseMatrix& m);

/// Basis data for the cokernel Q^ambient / colspan(sub).
struct QuotientSpace {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    SparseMatrix projection;                    // dim x ambient, kills colspan(sub)
    std::vector<std::size_t> representative_cols; // e_j lifting the quotient basis
};

/// `sub` columns span a subspace of Q^ambient (sub must have ambient_dim
/// rows). The projection composed with the inclusion of sub is zero.
QuotientSpace quotient_basis(const SparseMatrix& sub, std::size_t ambient_dim);

/// Solve m X = rhs columnwise; std::nullopt when any column is inconsistent.
/// Free variables are set to zero.
std::optional<SparseMatrix> solve(const SparseMatrix& m, const SparseMatrix& rhs);

/// A subquotient ker(d_out)/im(d_in) of a based Q-vector space, with enough
/// data to express cycles in homology coordinates (used for induced maps).
struct Subquotient {
    std::size_t chain_dim = 0;
    std::size_t dim = 0;
    SparseMatrix cycles;     // chain_dim x k, columns a kernel basis
    SparseMatrix projection; // dim x k, quotient by the image in cycle coordinates
    std::vector<std::size_t> rep_cols; // cycle column representing each class

    /// Homology coordinates of a cycle given in chain coordinates.
    std::vector<Rational> coords(const std::vector<Rational>& cycle) const;
    /// Chain-coordinate representative of the i-th homology basis class.
    std::vector<Rational> representative(std::size_t i) const;
};

/// ker(d_out)/im(d_in); requires d_out * d_in = 0.
Subquotient subquotient(const SparseMatrix& d_out, const SparseMatrix& d_in);

/// dim ker(d_out) - rank(d_in) without building basis data.
std::size_t homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in);

} // namespace lodual

#endif
