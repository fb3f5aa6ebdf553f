#include "toricgit/normal_form.hpp"

#include <random>

#include "doctest.h"
#include "toricgit/linalg.hpp"

using namespace toricgit;

namespace {

Rat rat_pow(const Rat& base, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// Independent raw torus action: scale the coefficient of y^f x^e by
// mu^f * lambda^e. Used as the oracle for the equivariance property.
TruncPoly act_raw(const TruncPoly& p, const VecQ& mu, const VecQ& lambda) {
  TruncPoly out = trunc_poly(p.nvars, p.bound);
  const int s = static_cast<int>(mu.size());
  for (const auto& [m, c] : p.terms) {
    Rat factor = c;
    for (int i = 0; i < s; ++i) factor *= rat_pow(mu(i), m[static_cast<size_t>(i)]);
    for (int j = s; j < p.nvars; ++j)
      factor *= rat_pow(lambda(j - s), m[static_cast<size_t>(j)]);
    add_term(out, m, factor);
  }
  return out;
}

std::vector<Monomial> monomials_up_to(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  Monomial m(static_cast<size_t>(nvars), 0);
  while (true) {
    int total = 0;
    for (int e : m) total += e;
    if (total <= maxdeg) out.push_back(m);
    int pos = 0;
    while (pos < nvars && m[static_cast<size_t>(pos)] == maxdeg) {
      m[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == nvars) break;
    ++m[static_cast<size_t>(pos)];
  }
  return out;
}

TruncPoly random_poly(int nvars, int bound, std::mt19937& rng, bool allow_const) {
  std::uniform_int_distribution<int> coeff(-2, 2), keep(0, 3), denom(1, 2);
  TruncPoly p = trunc_poly(nvars, bound);
  for (const Monomial& m : monomials_up_to(nvars, bound - 1)) {
    bool constant = true;
    for (int e : m) constant = constant && e == 0;
    if (constant && !allow_const) continue;
    if (keep(rng) != 0) continue;
    int c = coeff(rng);
    if (c != 0) add_term(p, m, Rat(c, denom(rng)));
  }
  return p;
}

// Random normal-form data plus generators distorted by an invertible left
// multiplication and by adding multiples of other generators; both preserve
// the generated ideal.
struct Scenario {
  NormalForm nf;
  std::vector<TruncPoly> generators;
};

Scenario random_scenario(std::mt19937& rng, int s, int t, int d, bool distort) {
  const int n = s + t;
  Scenario sc;
  sc.nf.s = s;
  sc.nf.t = t;
  sc.nf.d = d;
  for (int i = 0; i < s; ++i) sc.nf.h.push_back(random_poly(t, d, rng, false));

  for (int i = 0; i < s; ++i) {
    TruncPoly g = trunc_poly(n, d);
    Monomial lead(static_cast<size_t>(n), 0);
    lead[static_cast<size_t>(i)] = 1;
    add_term(g, lead, 1);
    for (const auto& [m, c] : sc.nf.h[static_cast<size_t>(i)].terms) {
      Monomial full(static_cast<size_t>(n), 0);
      for (int j = 0; j < t; ++j) full[static_cast<size_t>(s + j)] = m[static_cast<size_t>(j)];
      add_term(g, full, c);
    }
    sc.generators.push_back(g);
  }
  if (!distort) return sc;

  std::uniform_int_distribution<int> coeff(-2, 2), pick(0, s - 1);
  // unipotent lower then upper triangular mix, then nonzero diagonal scaling
  for (int i = 1; i < s; ++i)
    for (int j = 0; j < i; ++j) {
      int c = coeff(rng);
      if (c != 0)
        sc.generators[static_cast<size_t>(i)] = add(
            sc.generators[static_cast<size_t>(i)],
            scale(sc.generators[static_cast<size_t>(j)], Rat(c, 2)));
    }
  for (int i = s - 2; i >= 0; --i)
    for (int j = i + 1; j < s; ++j) {
      int c = coeff(rng);
      if (c != 0)
        sc.generators[static_cast<size_t>(i)] = add(
            sc.generators[static_cast<size_t>(i)],
            scale(sc.generators[static_cast<size_t>(j)], Rat(c)));
    }
  for (int i = 0; i < s; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 3;
    sc.generators[static_cast<size_t>(i)] =
        scale(sc.generators[static_cast<size_t>(i)], Rat(c, 2));
  }
  // re-generation: add polynomial multiples of other generators
  for (int round = 0; round < 2; ++round) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    TruncPoly q = random_poly(n, d, rng, true);
    sc.generators[static_cast<size_t>(i)] = add(
        sc.generators[static_cast<size_t>(i)],
        mul(q, sc.generators[static_cast<size_t>(j)]));
  }
  return sc;
}

NormalForm cyclic_example() {
  NormalForm nf;
  nf.s = 3;
  nf.t = 3;
  nf.d = 4;
  nf.h.push_back(trunc_poly(3, 4, {{{1, 2, 0}, Rat(1)}}));
  nf.h.push_back(trunc_poly(3, 4, {{{0, 1, 2}, Rat(1)}}));
  nf.h.push_back(trunc_poly(3, 4, {{{2, 0, 1}, Rat(1)}}));
  return nf;
}

}  // namespace

TEST_CASE("truncated polynomial arithmetic") {
  TruncPoly p = trunc_poly(1, 3, {{{0}, Rat(1)}, {{1}, Rat(1)}});
  TruncPoly sq = mul(p, p);
  CHECK(coefficient(sq, {0}) == 1);
  CHECK(coefficient(sq, {1}) == 2);
  CHECK(coefficient(sq, {2}) == 1);

  TruncPoly low = trunc_poly(1, 2, {{{0}, Rat(1)}, {{1}, Rat(1)}});
  TruncPoly sq2 = mul(low, low);
  CHECK(coefficient(sq2, {1}) == 2);
  CHECK(coefficient(sq2, {2}) == 0);
  CHECK(sq2.terms.size() == 2);

  TruncPoly q = trunc_poly(1, 3);
  add_term(q, {1}, Rat(1, 2));
  add_term(q, {1}, Rat(-1, 2));
  CHECK(q.terms.empty());
  add_term(q, {5}, Rat(7));  // beyond the bound, silently dropped
  CHECK(q.terms.empty());

  CHECK(p == p);
  CHECK_FALSE(p == low);
  CHECK_THROWS_AS(trunc_poly(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(add_term(q, {1, 1}, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(mul(p, trunc_poly(2, 3)), std::invalid_argument);
}

TEST_CASE("normalize frozen examples") {
  // y1 + x1 x2 is already in normal form
  TruncPoly g = trunc_poly(3, 3, {{{1, 0, 0}, Rat(1)}, {{0, 1, 1}, Rat(1)}});
  NormalForm nf = normalize({g}, 3);
  CHECK(nf.s == 1);
  CHECK(nf.t == 2);
  CHECK(nf.h[0] == trunc_poly(2, 3, {{{1, 1}, Rat(1)}}));

  // 2y1 + 2x1 + 2y1x1: scaling and one elimination give h1 = x1 - x1^2
  g = trunc_poly(2, 3, {{{1, 0}, Rat(2)}, {{0, 1}, Rat(2)}, {{1, 1}, Rat(2)}});
  nf = normalize({g}, 3);
  CHECK(nf.h[0] == trunc_poly(1, 3, {{{1}, Rat(1)}, {{2}, Rat(-1)}}));

  // eliminating y2 x1 from g1 pushes everything past the truncation bound
  TruncPoly g1 = trunc_poly(3, 3, {{{1, 0, 0}, Rat(1)}, {{0, 1, 1}, Rat(1)}});
  TruncPoly g2 = trunc_poly(3, 3, {{{0, 1, 0}, Rat(1)}, {{0, 0, 2}, Rat(1)}});
  nf = normalize({g1, g2}, 3);
  CHECK(nf.h[0] == trunc_poly(1, 3));
  CHECK(nf.h[1] == trunc_poly(1, 3, {{{2}, Rat(1)}}));

  // singular y-linear part
  TruncPoly b1 = trunc_poly(3, 2, {{{1, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)}});
  TruncPoly b2 = trunc_poly(3, 2, {{{1, 0, 0}, Rat(1)}, {{0, 1, 0}, Rat(1)},
                                   {{0, 0, 1}, Rat(1)}});
  CHECK_THROWS_AS(normalize({b1, b2}, 2), DegenerateLinearPart);

  CHECK_THROWS_AS(normalize({}, 3), std::invalid_argument);
  TruncPoly cst = trunc_poly(2, 3, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}});
  CHECK_THROWS_AS(normalize({cst}, 3), std::invalid_argument);
  TruncPoly wrong_bound = trunc_poly(2, 2, {{{1, 0}, Rat(1)}});
  CHECK_THROWS_AS(normalize({wrong_bound}, 3), std::invalid_argument);
  TruncPoly tiny = trunc_poly(1, 3, {{{1}, Rat(1)}});
  CHECK_THROWS_AS(normalize({tiny, tiny}, 3), std::invalid_argument);
}

TEST_CASE("normal form depends only on the ideal") {
  std::mt19937 rng(20240818u);
  std::uniform_int_distribution<int> sdist(1, 3), tdist(1, 3), ddist(2, 4);
  for (int iter = 0; iter < 60; ++iter) {
    const int s = sdist(rng), t = tdist(rng), d = ddist(rng);
    Scenario sc = random_scenario(rng, s, t, d, true);
    NormalForm direct = normalize(sc.generators, d);
    NormalForm expected = sc.nf;
    CHECK(direct == expected);
  }
}

TEST_CASE("torus action on normal forms") {
  NormalForm nf;
  nf.s = 1;
  nf.t = 2;
  nf.d = 4;
  nf.h.push_back(trunc_poly(2, 4, {{{1, 2}, Rat(1)}}));

  NormalForm same = act_on_normal_form(vecq({1}), vecq({1, 1}), nf);
  CHECK(same == nf);

  // mu1 = lambda1 * lambda2^2 fixes x1 x2^2
  same = act_on_normal_form(vecq({4}), vecq({1, 2}), nf);
  CHECK(same == nf);

  NormalForm lin;
  lin.s = 1;
  lin.t = 2;
  lin.d = 4;
  lin.h.push_back(trunc_poly(2, 4, {{{1, 0}, Rat(1)}}));
  NormalForm scaled = act_on_normal_form(vecq({1}), vecq({3, 1}), lin);
  CHECK(coefficient(scaled.h[0], {1, 0}) == 3);

  CHECK_THROWS_AS(act_on_normal_form(vecq({0}), vecq({1, 1}), nf), std::invalid_argument);
  CHECK_THROWS_AS(act_on_normal_form(vecq({1}), vecq({1}), nf), std::invalid_argument);

  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> pick(1, 3);
  for (int iter = 0; iter < 20; ++iter) {
    VecQ mu(1), lam(2);
    mu(0) = Rat(pick(rng), pick(rng));
    lam(0) = Rat(-pick(rng));
    lam(1) = Rat(pick(rng), 2);
    NormalForm there = act_on_normal_form(mu, lam, nf);
    VecQ mui(1), lami(2);
    mui(0) = 1 / mu(0);
    lami(0) = 1 / lam(0);
    lami(1) = 1 / lam(1);
    CHECK(act_on_normal_form(mui, lami, there) == nf);
  }
}

TEST_CASE("normalization commutes with the torus action") {
  std::mt19937 rng(99u);
  std::uniform_int_distribution<int> sdist(1, 3), tdist(1, 3), ddist(2, 4), pick(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int iter = 0; iter < 60; ++iter) {
    const int s = sdist(rng), t = tdist(rng), d = ddist(rng);
    Scenario sc = random_scenario(rng, s, t, d, true);
    VecQ mu(s), lam(t);
    for (int i = 0; i < s; ++i)
      mu(i) = Rat(sign(rng) ? pick(rng) : -pick(rng), pick(rng));
    for (int j = 0; j < t; ++j)
      lam(j) = Rat(sign(rng) ? pick(rng) : -pick(rng), pick(rng));
    std::vector<TruncPoly> acted;
    for (const TruncPoly& g : sc.generators) acted.push_back(act_raw(g, mu, lam));
    CHECK(normalize(acted, d) == act_on_normal_form(mu, lam, normalize(sc.generators, d)));
  }
}

TEST_CASE("stabilizer lattices") {
  // cyclic doubling pattern: m_i = l_i + 2 l_{i+1}
  StabilizerLattice st = stabilizer(cyclic_example());
  REQUIRE(st.basis.rows() == 3);
  MatZ expected = matz({{1, 0, 2, 1, 0, 0}, {2, 1, 0, 0, 1, 0}, {0, 2, 1, 0, 0, 1}});
  CHECK(lattice_equal(st.basis, expected));

  NormalForm zero;
  zero.s = 2;
  zero.t = 1;
  zero.d = 3;
  zero.h.push_back(trunc_poly(1, 3));
  zero.h.push_back(trunc_poly(1, 3));
  StabilizerLattice full = stabilizer(zero);
  CHECK(full.basis.rows() == 3);
  MatZ id(3, 3);
  id.setIdentity();
  CHECK(lattice_equal(full.basis, id));

  NormalForm pinched;
  pinched.s = 1;
  pinched.t = 1;
  pinched.d = 3;
  pinched.h.push_back(trunc_poly(1, 3, {{{1}, Rat(1)}, {{2}, Rat(1)}}));
  CHECK(stabilizer(pinched).basis.rows() == 0);

  // distinguished monomial form: rank equals the number of x-variables
  NormalForm dist;
  dist.s = 2;
  dist.t = 2;
  dist.d = 4;
  dist.h.push_back(trunc_poly(2, 4, {{{1, 0}, Rat(1)}}));
  dist.h.push_back(trunc_poly(2, 4, {{{0, 2}, Rat(1)}}));
  StabilizerLattice ds = stabilizer(dist);
  REQUIRE(ds.basis.rows() == 2);
  CHECK(lattice_equal(ds.basis, matz({{1, 0, 1, 0}, {0, 2, 0, 1}})));
}

TEST_CASE("distinguished monomial membership and normalization") {
  MatZ c = matz({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}});
  NormalForm nf = cyclic_example();
  CHECK(in_W0(nf, c));
  CHECK(t_prime_normalize(nf, c) == nf);

  NormalForm scaled = nf;
  scaled.h[0] = scale(scaled.h[0], Rat(5));
  scaled.h[2] = scale(scaled.h[2], Rat(-1, 3));
  CHECK(in_W0(scaled, c));
  NormalForm fixed = t_prime_normalize(scaled, c);
  CHECK(fixed == nf);
  CHECK(t_prime_normalize(fixed, c) == fixed);
  CHECK(stabilizer(scaled).basis.rows() == stabilizer(fixed).basis.rows());
  CHECK(lattice_equal(stabilizer(scaled).basis, stabilizer(fixed).basis));

  NormalForm missing = nf;
  missing.h[0] = trunc_poly(3, 4, {{{0, 1, 0}, Rat(1)}});
  CHECK_FALSE(in_W0(missing, c));
  CHECK_THROWS_AS(t_prime_normalize(missing, c), std::invalid_argument);

  // row sums must stay below the truncation degree
  MatZ big = matz({{1, 2, 1}, {0, 1, 2}, {2, 0, 1}});
  CHECK_THROWS_AS(in_W0(nf, big), std::invalid_argument);
  MatZ neg = matz({{1, -2, 0}, {0, 1, 2}, {2, 0, 1}});
  CHECK_THROWS_AS(in_W0(nf, neg), std::invalid_argument);
  MatZ shape = matz({{1, 2, 0}, {0, 1, 2}});
  CHECK_THROWS_AS(in_W0(nf, shape), std::invalid_argument);
}
