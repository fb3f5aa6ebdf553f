#pragma once

// Exact integer and rational linear algebra: Hermite normal form with a
// unimodular transform, saturated integer kernels, and plain rational
// elimination. Everything returns exact results; inputs of any size are
// accepted (entries are arbitrary-precision).

#include "toricgit/numeric.hpp"

#include <optional>
#include <vector>

namespace toricgit {

struct HermiteResult {
  MatZ H;  // row-style Hermite normal form, U * M = H
  MatZ U;  // unimodular
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot), zero rows at the bottom. Unique for a given row space.
HermiteResult hermite_normal_form(const MatZ& M);

// Rows form a basis of the saturated lattice {v : M v = 0}. Saturation comes
// from reading the kernel off the unimodular transform of the transpose.
MatZ integer_kernel(const MatZ& M);

// Canonical basis of the lattice spanned by the rows: HNF with zero rows
// dropped. Two row sets span the same lattice iff their canonical bases match.
MatZ lattice_canonical_basis(const MatZ& rows);
bool lattice_equal(const MatZ& rows_a, const MatZ& rows_b);

// Membership of v in the lattice spanned by the rows.
bool lattice_contains(const MatZ& rows, const VecZ& v);

Int determinant(const MatZ& M);  // fraction-free (Bareiss)

Eigen::Index rank(const MatQ& M);
Eigen::Index rank(const MatZ& M);

// One exact solution of A x = b with free variables set to zero, if any.
std::optional<VecQ> solve_linear(const MatQ& A, const VecQ& b);

// Basis of {x : A x = 0} over the rationals, one vector per column.
std::vector<VecQ> kernel_basis(const MatQ& A);

}  // namespace toricgit
