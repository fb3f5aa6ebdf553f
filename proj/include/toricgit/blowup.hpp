#pragma once

#include <vector>

#include "toricgit/numeric.hpp"

namespace toricgit {

// Positive integer weights (a_1,...,a_n) for a weighted blow-up of affine
// space. repeated_weights(d, s, t) builds the frequent (d^s, 1^t) shape.
using WeightVector = std::vector<Int>;

WeightVector repeated_weights(const Int& d, int s, int t);

// Cyclic quotient singularity A^n / (1/d)(b_1,...,b_n). Residues are kept
// modulo the order; zero residues are coordinate directions the group acts
// trivially on (smooth factors).
struct CyclicQuotient {
  Int order = 1;
  std::vector<Int> residues;
};

// Reduces residues mod order, then picks the lexicographically least sorted
// residue list over all unit multiples of the group generator.
CyclicQuotient canonical(const CyclicQuotient& Q);
bool quotient_equal(const CyclicQuotient& A, const CyclicQuotient& B);
// True when the group acts trivially (all residues divisible by the order).
bool is_smooth_quotient(const CyclicQuotient& Q);

// Chart i of the weighted blow-up: A^n / (1/a_i)(-a_1,...,1,...,-a_n) with
// the i-th residue equal to 1. projection records the monomial substitution
// into chart coordinates: column j is the exponent vector of the image of
// the j-th downstairs variable, i.e. u_j = x_j * x_i^{a_j} and u_i = x_i^{a_i}.
struct ChartDescription {
  int index = 0;
  CyclicQuotient quotient;
  MatZ projection;
};

Int monomial_weight(const Monomial& m, const WeightVector& a);

// Minimal monomial generators of the ideal spanned by all monomials of
// weight >= c, sorted lexicographically. c = 0 gives {1}.
std::vector<Monomial> ideal_generators(const WeightVector& a, const Int& c);

// Checks that for weights (d^s, 1^t) and every 1 <= c <= d the ideal above
// equals (u_1,...,u_s) + (x-variables)^c, by mutual divisibility of the two
// generating sets. Desk scale only: s, t >= 1, s + t <= 6, d <= 6.
bool verify_Ic_claim(int s, int t, const Int& d);

std::vector<ChartDescription> charts(const WeightVector& a);

// Canonical quotient type of each chart, zero residues kept as smooth
// factors. For (d^s, 1^t) the s charts of order d all have s-1 smooth
// factors and residue pattern (1, (d-1)^t); the others are smooth.
std::vector<CyclicQuotient> classify_singularities(const WeightVector& a);

// Both discrepancy conventions for the exceptional divisor of the weighted
// blow-up of the origin: a_E follows K_Y = f^*K_X + a(E)E (ordinary blow-up
// of a point in A^n gives n-1), log_discrepancy is the plain weight sum.
struct DiscrepancyReport {
  Int a_E;
  Int log_discrepancy;
};
DiscrepancyReport blowup_discrepancy(const WeightVector& a);

// Discrepancy sum(v) - 1 of the divisorial valuation at v over the quotient.
// v must lie in the extended lattice Z^n + Z*(1/d)(b), sit in the nonnegative
// orthant, and be primitive there; each violation throws invalid_argument.
Rat toric_discrepancy(const CyclicQuotient& Q, const VecQ& v);

// Stepwise weighted blow-up resolution of 1/d(1,(-1)^t). Step i extracts the
// divisor P(d-i, 1^t) over the residual singularity 1/(d-i+1)(1,(-1)^t);
// cumulative_discrepancy is measured over the original singularity and
// step_discrepancy over the immediate base of the step.
struct TowerStep {
  Int level;
  WeightVector divisor_weights;
  Rat step_discrepancy;
  Rat cumulative_discrepancy;
  CyclicQuotient residual;
};
struct ResolutionTower {
  CyclicQuotient input;
  std::vector<TowerStep> steps;
};
ResolutionTower resolution_tower(const Int& d, int t);

// Exhaustive minimum of sum(v) - 1 over primitive lattice points of the
// quotient 1/d(1,(-1)^t) with all coordinates positive and sum(v) <= bound.
// Points on the orthant boundary are centered over coordinate subvarieties,
// not over the singular point, so they are excluded. unique means exactly
// one enumerated point attains the minimum.
struct ScanResult {
  Rat minimum;
  VecQ attaining;
  bool unique = false;
};
ScanResult minimal_discrepancy_scan(const Int& d, int t, const Rat& bound);

// Deterministic coefficients b_i and scale c with b pairwise distinct and
// c*e_i - b_i >= 0: b = (1,...,k), c = max_i ceil(b_i / e_i).
struct PolarizationCoefficients {
  std::vector<Int> b;
  Int c;
};
PolarizationCoefficients polarization_coefficients(const std::vector<Rat>& e);

}  // namespace toricgit
