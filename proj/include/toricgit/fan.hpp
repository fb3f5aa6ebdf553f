#pragma once

// Rational simplicial fans: validation, smoothness, completeness, strictly
// convex support functions, and the quotient presentation dictionary
// (ray matrix cokernel <-> saturated kernel reconstruction).

#include <optional>
#include <string>
#include <vector>

#include "toricgit/cone.hpp"
#include "toricgit/numeric.hpp"

namespace toricgit {

// Rays are the columns of `rays`; max_cones lists each maximal cone as a
// set of ray indices (0-based, order irrelevant). Only simplicial fans are
// supported: every listed cone must have linearly independent rays.
struct Fan {
  Eigen::Index rank = 0;
  MatZ rays;
  std::vector<std::vector<Eigen::Index>> max_cones;
};

struct FanProblem {
  std::string what;
  std::vector<size_t> cones;  // indices into max_cones of the offenders, if any
};

struct FanDiagnostics {
  std::vector<FanProblem> problems;
  bool ok() const { return problems.empty(); }
};

// Structural checks: primitive distinct rays, in-range index sets,
// simplicial strongly convex cones, no cone contained in another, and the
// pairwise condition that any two cones intersect in a common face.
FanDiagnostics validate_fan(const Fan& F);

// Throws std::invalid_argument with the first problem when invalid.
void require_valid(const Fan& F);

// Every maximal cone's rays extend to a basis of the integer lattice.
bool is_smooth(const Fan& F);

// Pure of full dimension and boundaryless: every facet of a maximal cone
// is shared by exactly two maximal cones.
bool is_complete(const Fan& F);

// One linear functional per maximal cone (column i for max_cones[i]),
// agreeing on shared faces and strictly convex across every wall. Exists
// iff the toric variety of the fan is projective.
struct SupportFunction {
  MatQ functionals;
};

// Requires a valid complete fan; nullopt when no strictly convex function
// exists. Returned witnesses are re-verified exactly.
std::optional<SupportFunction> projective_support_function(const Fan& F);

// Quotient presentation: variables indexed like rays, graded by `degrees`
// (one column per variable), with the minimal non-cone ray subsets.
struct CoxPresentation {
  Eigen::Index num_vars = 0;
  MatZ degrees;  // k x N, k = N - rank
  std::vector<std::vector<Eigen::Index>> primitive_collections;
};

// Degrees are a saturated cokernel presentation of the ray matrix; errors
// when the rays do not span or the class group has torsion.
CoxPresentation cox_of_fan(const Fan& F);

// Rays are the coordinate columns of a saturated kernel basis of the
// degree matrix; cones are the maximal subsets containing no primitive
// collection. The result is validated before being returned.
Fan fan_of_cox(const CoxPresentation& P);

// A nonzero character in the relative interior of every cone
// Cone(degree columns j : j not in sigma), sigma maximal: a polarization
// keeping all distinguished orbit classes stable. Exists iff the quotient
// is projective; witnesses are re-verified through the generator route.
std::optional<VecZ> git_ample_character(const CoxPresentation& P);

// Canonical form under lattice automorphisms and ray relabeling: Hermite
// form of the ray matrix, rays sorted lexicographically, cones sorted.
Fan canonical_fan(const Fan& F);

// Equality of canonical forms.
bool fan_equals(const Fan& A, const Fan& B);

}  // namespace toricgit
