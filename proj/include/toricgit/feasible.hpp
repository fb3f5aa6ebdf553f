#pragma once

// Exact feasibility of homogeneous linear systems over the rationals,
// decided by Fourier-Motzkin elimination with equality presolve.

#include <optional>

#include "toricgit/numeric.hpp"

namespace toricgit {

// Decide whether  eq x = 0,  weak x >= 0,  strict x > 0  (rowwise) has a
// rational solution, returning one if so. The system must be homogeneous;
// strict rows are scale-invariant, so they are solved as strict x >= 1.
// Any block may have zero rows, but blocks with rows must agree on the
// number of columns. A returned witness is re-verified by substitution
// before being handed back; a failed verification throws std::logic_error.
std::optional<VecQ> feasible(const MatQ& eq, const MatQ& weak, const MatQ& strict);
std::optional<VecQ> feasible(const MatZ& eq, const MatZ& weak, const MatZ& strict);

}  // namespace toricgit
