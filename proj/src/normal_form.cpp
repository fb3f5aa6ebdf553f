#include "toricgit/normal_form.hpp"

#include <algorithm>

#include "toricgit/linalg.hpp"

namespace toricgit {

namespace {

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

void require_shape(const TruncPoly& p, int nvars, int bound) {
  if (p.nvars != nvars) throw std::invalid_argument("variable count mismatch");
  if (p.bound != bound) throw std::invalid_argument("truncation bound mismatch");
}

// coeff * x^shift * p, truncated
TruncPoly shift_scale(const TruncPoly& p, const Monomial& shift, const Rat& coeff) {
  TruncPoly out = trunc_poly(p.nvars, p.bound);
  for (const auto& [m, c] : p.terms) {
    Monomial moved = m;
    for (size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
    add_term(out, moved, c * coeff);
  }
  return out;
}

void require_normal_form(const NormalForm& nf) {
  if (nf.s < 1 || nf.t < 0 || nf.d < 1)
    throw std::invalid_argument("malformed normal form dimensions");
  if (nf.h.size() != static_cast<size_t>(nf.s))
    throw std::invalid_argument("normal form needs one polynomial per leading variable");
  const Monomial origin(static_cast<size_t>(nf.t), 0);
  for (const TruncPoly& hi : nf.h) {
    require_shape(hi, nf.t, nf.d);
    if (coefficient(hi, origin) != 0)
      throw std::invalid_argument("normal form polynomials must vanish at the origin");
  }
}

}  // namespace

TruncPoly trunc_poly(int nvars, int bound) {
  if (nvars < 0) throw std::invalid_argument("variable count must be nonnegative");
  if (bound < 1) throw std::invalid_argument("truncation bound must be positive");
  TruncPoly p;
  p.nvars = nvars;
  p.bound = bound;
  return p;
}

TruncPoly trunc_poly(int nvars, int bound,
                     std::initializer_list<std::pair<Monomial, Rat>> terms) {
  TruncPoly p = trunc_poly(nvars, bound);
  for (const auto& [m, c] : terms) add_term(p, m, c);
  return p;
}

void add_term(TruncPoly& p, const Monomial& m, const Rat& c) {
  if (m.size() != static_cast<size_t>(p.nvars))
    throw std::invalid_argument("monomial has the wrong number of variables");
  for (int e : m)
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
  if (c == 0 || total_degree(m) >= p.bound) return;
  Rat& slot = p.terms[m];
  slot += c;
  if (slot == 0) p.terms.erase(m);
}

Rat coefficient(const TruncPoly& p, const Monomial& m) {
  if (m.size() != static_cast<size_t>(p.nvars))
    throw std::invalid_argument("monomial has the wrong number of variables");
  auto it = p.terms.find(m);
  return it == p.terms.end() ? Rat(0) : it->second;
}

TruncPoly add(const TruncPoly& a, const TruncPoly& b) {
  require_shape(b, a.nvars, a.bound);
  TruncPoly out = a;
  for (const auto& [m, c] : b.terms) add_term(out, m, c);
  return out;
}

TruncPoly scale(const TruncPoly& a, const Rat& c) {
  TruncPoly out = trunc_poly(a.nvars, a.bound);
  if (c == 0) return out;
  for (const auto& [m, coeff] : a.terms) out.terms[m] = coeff * c;
  return out;
}

TruncPoly mul(const TruncPoly& a, const TruncPoly& b) {
  require_shape(b, a.nvars, a.bound);
  TruncPoly out = trunc_poly(a.nvars, a.bound);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      add_term(out, m, ca * cb);
    }
  return out;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
  return a.nvars == b.nvars && a.bound == b.bound && a.terms == b.terms;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  return a.s == b.s && a.t == b.t && a.d == b.d && a.h == b.h;
}

NormalForm normalize(const std::vector<TruncPoly>& generators, int d) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  if (d < 1) throw std::invalid_argument("truncation degree must be positive");
  const int s = static_cast<int>(generators.size());
  const int n = generators[0].nvars;
  for (const TruncPoly& g : generators) require_shape(g, n, d);
  if (s > n) throw std::invalid_argument("more generators than variables");
  const int t = n - s;

  const Monomial origin(static_cast<size_t>(n), 0);
  for (const TruncPoly& g : generators)
    if (coefficient(g, origin) != 0)
      throw std::invalid_argument("generators must vanish at the origin");

  auto unit = [&](int v) {
    Monomial m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(v)] = 1;
    return m;
  };

  MatQ L(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      L(i, j) = coefficient(generators[static_cast<size_t>(i)], unit(j));
  if (rank(L) != s)
    throw DegenerateLinearPart("the leading linear parts of the generators are dependent");

  // row i of the inverse solves L^T x = e_i
  MatQ LT = L.transpose();
  MatQ inv(s, s);
  for (int i = 0; i < s; ++i) {
    VecQ e(s);
    e.setZero();
    e(i) = 1;
    auto sol = solve_linear(LT, e);
    if (!sol) throw std::logic_error("full-rank linear system must be solvable");
    for (int k = 0; k < s; ++k) inv(i, k) = (*sol)(k);
  }

  std::vector<TruncPoly> g;
  for (int i = 0; i < s; ++i) {
    TruncPoly gi = trunc_poly(n, d);
    for (int k = 0; k < s; ++k)
      gi = add(gi, scale(generators[static_cast<size_t>(k)], inv(i, k)));
    g.push_back(std::move(gi));
  }

  // eliminate y-involving monomials, lowest total degree first; each rewrite
  // replaces one such monomial by terms of the same degree with fewer y
  // factors or by higher-degree terms, so the loop terminates
  for (long iter = 0;; ++iter) {
    if (iter > 200000) throw std::logic_error("elimination failed to terminate");
    int best_i = -1;
    Monomial best_m;
    int best_deg = 0;
    for (int i = 0; i < s; ++i)
      for (const auto& [m, c] : g[static_cast<size_t>(i)].terms) {
        int ydeg = 0;
        for (int j = 0; j < s; ++j) ydeg += m[static_cast<size_t>(j)];
        if (ydeg == 0) continue;
        if (m == unit(i)) continue;  // the leading term stays
        const int deg = total_degree(m);
        if (best_i < 0 || deg < best_deg) {
          best_i = i;
          best_m = m;
          best_deg = deg;
        }
      }
    if (best_i < 0) break;
    int j = 0;
    while (best_m[static_cast<size_t>(j)] == 0) ++j;
    Monomial shift = best_m;
    shift[static_cast<size_t>(j)] -= 1;
    const Rat c = coefficient(g[static_cast<size_t>(best_i)], best_m);
    g[static_cast<size_t>(best_i)] =
        add(g[static_cast<size_t>(best_i)], shift_scale(g[static_cast<size_t>(j)], shift, -c));
  }

  NormalForm out;
  out.s = s;
  out.t = t;
  out.d = d;
  for (int i = 0; i < s; ++i) {
    if (coefficient(g[static_cast<size_t>(i)], unit(i)) != 1)
      throw std::logic_error("leading coefficient drifted during elimination");
    TruncPoly hi = trunc_poly(t, d);
    for (const auto& [m, c] : g[static_cast<size_t>(i)].terms) {
      if (m == unit(i)) continue;
      Monomial tail(m.begin() + s, m.end());
      if (total_degree(tail) != total_degree(m))
        throw std::logic_error("elimination left a mixed monomial behind");
      add_term(hi, tail, c);
    }
    out.h.push_back(std::move(hi));
  }
  require_normal_form(out);
  return out;
}

NormalForm act_on_normal_form(const VecQ& mu, const VecQ& lambda, const NormalForm& nf) {
  require_normal_form(nf);
  if (mu.size() != nf.s || lambda.size() != nf.t)
    throw std::invalid_argument("scalar counts must match the variable split");
  for (Eigen::Index i = 0; i < mu.size(); ++i)
    if (mu(i) == 0) throw std::invalid_argument("torus scalars must be nonzero");
  for (Eigen::Index j = 0; j < lambda.size(); ++j)
    if (lambda(j) == 0) throw std::invalid_argument("torus scalars must be nonzero");

  NormalForm out = nf;
  for (int i = 0; i < nf.s; ++i) {
    TruncPoly hi = trunc_poly(nf.t, nf.d);
    for (const auto& [m, c] : nf.h[static_cast<size_t>(i)].terms) {
      Rat factor = c / mu(i);
      for (int j = 0; j < nf.t; ++j)
        for (int rep = 0; rep < m[static_cast<size_t>(j)]; ++rep) factor *= lambda(j);
      add_term(hi, m, factor);
    }
    out.h[static_cast<size_t>(i)] = std::move(hi);
  }
  return out;
}

StabilizerLattice stabilizer(const NormalForm& nf) {
  require_normal_form(nf);
  const Eigen::Index cols = nf.s + nf.t;
  Eigen::Index rows = 0;
  for (const TruncPoly& hi : nf.h) rows += static_cast<Eigen::Index>(hi.terms.size());
  MatZ C(rows, cols);
  C.setZero();
  Eigen::Index r = 0;
  for (int i = 0; i < nf.s; ++i)
    for (const auto& [m, c] : nf.h[static_cast<size_t>(i)].terms) {
      C(r, i) = 1;
      for (int j = 0; j < nf.t; ++j) C(r, nf.s + j) = -Int(m[static_cast<size_t>(j)]);
      ++r;
    }
  return StabilizerLattice{integer_kernel(C)};
}

bool in_W0(const NormalForm& nf, const MatZ& c) {
  require_normal_form(nf);
  if (c.rows() != nf.s || c.cols() != nf.t)
    throw std::invalid_argument("exponent matrix shape must match the variable split");
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    Int row_sum = 0;
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (c(i, j) < 0) throw std::invalid_argument("exponents must be nonnegative");
      row_sum += c(i, j);
    }
    if (row_sum > nf.d - 1)
      throw std::invalid_argument("distinguished monomial exceeds the truncation degree");
  }
  for (int i = 0; i < nf.s; ++i) {
    Monomial m(static_cast<size_t>(nf.t));
    for (int j = 0; j < nf.t; ++j) m[static_cast<size_t>(j)] = c(i, j).convert_to<int>();
    if (coefficient(nf.h[static_cast<size_t>(i)], m) == 0) return false;
  }
  return true;
}

NormalForm t_prime_normalize(const NormalForm& nf, const MatZ& c) {
  if (!in_W0(nf, c))
    throw std::invalid_argument("a distinguished monomial is missing, cannot normalize");
  NormalForm out = nf;
  for (int i = 0; i < nf.s; ++i) {
    Monomial m(static_cast<size_t>(nf.t));
    for (int j = 0; j < nf.t; ++j) m[static_cast<size_t>(j)] = c(i, j).convert_to<int>();
    const Rat lead = coefficient(nf.h[static_cast<size_t>(i)], m);
    out.h[static_cast<size_t>(i)] = scale(nf.h[static_cast<size_t>(i)], 1 / lead);
  }
  return out;
}

}  // namespace toricgit
