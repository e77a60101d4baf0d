#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/rational.hpp"

namespace trop {

// Reduced row echelon form. Pivoting is deterministic: columns left to
// right, first row with a nonzero entry. The result is canonical for a
// given input, which golden-file tests rely on.
struct Rref {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};
Rref rref(RatMatrix a);

// Rank over Q via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of {x : x^T m = 0}, rows in reduced echelon form (canonical).
std::vector<RatVec> left_kernel_basis(const RatMatrix& m);
std::vector<RatVec> left_kernel_basis(const IntMatrix& m);

// Basis of the column kernel {x : m x = 0} over Q, canonical.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Row-style Hermite normal form: h = u * m with u unimodular, pivots
// positive, entries above a pivot reduced into [0, pivot).
struct Hnf {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};
Hnf hnf(const IntMatrix& m);

// Rows form a basis of the saturated lattice {x in Z^n : m x^T = 0},
// canonicalized via HNF.
IntMatrix integer_kernel(const IntMatrix& m);

// One exact solution of m x = b with every free variable set to 0, or
// nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

Int determinant(const IntMatrix& m);

// Clears denominators row by row; spans and kernels are unchanged.
IntMatrix clear_denominators(const RatMatrix& m);
IntVec clear_denominators(const RatVec& v);

// Span comparison helper: do the rows of a and b generate the same
// Q-subspace? (Compares canonical RREFs of the stacked rows.)
bool same_row_space(const std::vector<RatVec>& a, const std::vector<RatVec>& b);

RatMatrix rows_to_matrix(const std::vector<RatVec>& rows, std::size_t cols);

}  // namespace trop
