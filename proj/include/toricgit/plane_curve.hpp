#pragma once

// Hilbert-Mumford weight arithmetic for plane curves with a point of high
// multiplicity, and the search for unstable curves passing the genus bound.

#include <vector>

#include "toricgit/numeric.hpp"

namespace toricgit {

// A one-parameter subgroup of the diagonal torus acting on the plane.
struct OnePS {
  VecZ w;
};

// Normalize to sum zero: subtract the mean when the sum is divisible by the
// length, otherwise scale by the length first.
VecZ normalize(const OnePS& l);

// Minimum of a w0 + b w1 + c w2 over monomials x^a y^b z^c with
// a + b + c = d and c <= d - m (multiplicity >= m at (0:0:1)); the weights
// are the normalized l. Positive minimum certifies instability under l.
// Throws std::invalid_argument unless 0 <= m <= d.
Int plane_curve_min_weight(long d, long m, const OnePS& l);

// Exact comparison binom(m,2) < binom(d-1,2)/2: the multiplicity-m locus is
// small enough that generic such curves are limits of smooth ones.
bool genus_condition(long d, long m);

struct UnstableSmoothable {
  long d = 0;
  long m = 0;
  Int min_weight;  // under the subgroup (1,1,-2)
};

// All (d, m) with d <= d_max, 3m > 2d, and the genus condition: curves that
// are unstable yet smoothable.
std::vector<UnstableSmoothable> find_unstable_smoothable(long d_max);

}  // namespace toricgit
