#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "toricgit/numeric.hpp"

namespace toricgit {

// Polynomial with exact rational coefficients, truncated at total degree
// bound - 1 (arithmetic works modulo the bound-th power of the maximal
// ideal). Only nonzero coefficients are stored.
struct TruncPoly {
  int nvars = 0;
  int bound = 1;
  std::map<Monomial, Rat> terms;
};

TruncPoly trunc_poly(int nvars, int bound);
TruncPoly trunc_poly(int nvars, int bound,
                     std::initializer_list<std::pair<Monomial, Rat>> terms);
// Accumulates c on monomial m, dropping the term if it cancels or if the
// total degree reaches the truncation bound.
void add_term(TruncPoly& p, const Monomial& m, const Rat& c);
Rat coefficient(const TruncPoly& p, const Monomial& m);
TruncPoly add(const TruncPoly& a, const TruncPoly& b);
TruncPoly scale(const TruncPoly& a, const Rat& c);
TruncPoly mul(const TruncPoly& a, const TruncPoly& b);
bool operator==(const TruncPoly& a, const TruncPoly& b);

// Thrown when the y-linear coefficient matrix of a generator set is
// singular, so no coordinate change can reach the normal form.
struct DegenerateLinearPart : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ideal normal form u_i = y_i + h_i(x): the h_i are polynomials in the t
// trailing variables only, vanish at the origin, and determine the ideal
// modulo degree d uniquely.
struct NormalForm {
  int s = 0;
  int t = 0;
  int d = 1;
  std::vector<TruncPoly> h;  // each in t variables with bound d
};
bool operator==(const NormalForm& a, const NormalForm& b);

// Rewrites s generators in s+t variables (y-block first) into the normal
// form of the ideal they generate modulo degree d. The y-linear part must be
// invertible (DegenerateLinearPart otherwise); generators must vanish at the
// origin and carry the same variable count and truncation bound.
NormalForm normalize(const std::vector<TruncPoly>& generators, int d);

// Torus action on normal forms: the coefficient of x^e in h_i picks up the
// factor mu_i^{-1} * lambda^e. All scalars must be nonzero.
NormalForm act_on_normal_form(const VecQ& mu, const VecQ& lambda, const NormalForm& nf);

// Cocharacter lattice of the subtorus fixing the normal form: all integer
// (m, l) with m_i = <l, e> for every monomial x^e appearing in h_i. Rows
// form a saturated basis inside Z^{s+t}.
struct StabilizerLattice {
  MatZ basis;
};
StabilizerLattice stabilizer(const NormalForm& nf);

// Distinguished-monomial tests for an s x t exponent matrix c whose row sums
// stay below d: in_W0 checks every h_i carries x^{c_i} with nonzero
// coefficient, and t_prime_normalize rescales each h_i to make that
// coefficient 1 (refusing when in_W0 fails). Idempotent.
bool in_W0(const NormalForm& nf, const MatZ& c);
NormalForm t_prime_normalize(const NormalForm& nf, const MatZ& c);

}  // namespace toricgit
