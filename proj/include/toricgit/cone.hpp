#pragma once

// Rational polyhedral cones with exact dual descriptions. Cones are small
// here (ambient dimension a dozen or less), so the double description method
// with a full redundancy prune is both simple and fast enough.

#include <vector>

#include "toricgit/numeric.hpp"

namespace toricgit {

// Halfspace description { x : eq x = 0, ineq x >= 0 }; rows are inward
// normals. When produced by facets(), eq rows are a basis of the orthogonal
// complement of the cone's linear span and ineq rows are exactly the facet
// normals, so the relative interior is { eq x = 0, ineq x > 0 }. Blocks with
// zero rows must still carry the ambient number of columns.
struct FacetSystem {
  MatZ eq;
  MatZ ineq;
};

// Generator description lineality + cone(rays); generators are columns.
// Rays are primitive, extreme modulo lineality, and sorted, so equal pointed
// cones produce identical ray matrices.
struct GeneratorSystem {
  MatZ lineality;
  MatZ rays;
};

// Enumerate generators of { x : F.eq x = 0, F.ineq x >= 0 }.
GeneratorSystem cone_from_halfspaces(const FacetSystem& F);

// Facet description of the cone spanned by the given generator columns.
FacetSystem facets(const MatZ& generators);
FacetSystem facets(const GeneratorSystem& G);

// All generators of G as one column matrix: lineality, -lineality, rays.
MatZ spanning_columns(const GeneratorSystem& G);

// Membership by substitution into a halfspace description.
bool cone_contains(const FacetSystem& F, const VecQ& x);
bool cone_contains_relint(const FacetSystem& F, const VecQ& x);

// Membership in cone(columns of G), decided as feasibility of
// G lambda = s x, lambda >= 0, s > 0. The relint variant demands every
// lambda strictly positive, which characterizes the relative interior of a
// finitely generated cone.
bool in_cone(const MatZ& generators, const VecQ& x);
bool in_cone_relint(const MatZ& generators, const VecQ& x);

// Canonical facet description of the intersection of two cones.
FacetSystem intersect(const FacetSystem& A, const FacetSystem& B);

// Whether the cone is {0}. Decided twice, by ray enumeration and by 2n sign
// feasibility problems; disagreement between the routes throws
// std::logic_error.
bool is_zero_cone(const FacetSystem& F);

// Mutual containment of two cones given by generators.
bool cone_equals(const GeneratorSystem& A, const GeneratorSystem& B);

}  // namespace toricgit
