#include "toricgit/blowup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toricgit {

namespace {

Int mod_reduce(const Int& x, const Int& d) {
  Int r = x % d;
  if (r < 0) r += d;
  return r;
}

void require_weights(const WeightVector& a) {
  if (a.empty()) throw std::invalid_argument("weight vector must be nonempty");
  for (const Int& w : a)
    if (w < 1) throw std::invalid_argument("weights must be positive");
}

void require_quotient(const CyclicQuotient& Q) {
  if (Q.order < 1) throw std::invalid_argument("quotient order must be positive");
}

bool divides(const Monomial& g, const Monomial& m) {
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] > m[i]) return false;
  return true;
}

bool covered_by(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

bool lattice_member(const CyclicQuotient& Q, const VecQ& v) {
  for (Int k = 0; k < Q.order; ++k) {
    bool ok = true;
    for (Eigen::Index i = 0; i < v.size() && ok; ++i) {
      Rat diff = v(i) - Rat(k * Q.residues[static_cast<size_t>(i)], Q.order);
      ok = den(diff) == 1;
    }
    if (ok) return true;
  }
  return false;
}

// Assumes membership; a nonzero point is primitive when no integer divisor of
// the scaled coordinates keeps it inside the lattice.
bool lattice_primitive(const CyclicQuotient& Q, const VecQ& v) {
  if (exact_zero(v)) return false;
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(num(v(i) * Q.order)));
  for (Int m = 2; m <= g; ++m) {
    if (g % m != 0) continue;
    VecQ w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = v(i) / Rat(m);
    if (lattice_member(Q, w)) return false;
  }
  return true;
}

CyclicQuotient residual_quotient(const Int& order, int t) {
  CyclicQuotient Q;
  Q.order = order;
  Q.residues.push_back(mod_reduce(1, order));
  for (int j = 0; j < t; ++j) Q.residues.push_back(mod_reduce(-1, order));
  return Q;
}

}  // namespace

WeightVector repeated_weights(const Int& d, int s, int t) {
  if (d < 1) throw std::invalid_argument("leading weight must be positive");
  if (s < 0 || t < 0 || s + t < 1)
    throw std::invalid_argument("need at least one variable");
  WeightVector a;
  for (int i = 0; i < s; ++i) a.push_back(d);
  for (int i = 0; i < t; ++i) a.push_back(1);
  return a;
}

CyclicQuotient canonical(const CyclicQuotient& Q) {
  require_quotient(Q);
  CyclicQuotient out;
  out.order = Q.order;
  out.residues.assign(Q.residues.size(), 0);
  if (Q.order == 1) return out;
  std::vector<Int> best;
  bool have = false;
  for (Int u = 1; u < Q.order; ++u) {
    if (boost::multiprecision::gcd(u, Q.order) != 1) continue;
    std::vector<Int> cand;
    for (const Int& b : Q.residues) cand.push_back(mod_reduce(u * b, Q.order));
    std::sort(cand.begin(), cand.end());
    if (!have || cand < best) {
      best = std::move(cand);
      have = true;
    }
  }
  out.residues = std::move(best);
  return out;
}

bool quotient_equal(const CyclicQuotient& A, const CyclicQuotient& B) {
  if (A.order != B.order) return false;
  return canonical(A).residues == canonical(B).residues;
}

bool is_smooth_quotient(const CyclicQuotient& Q) {
  require_quotient(Q);
  for (const Int& b : Q.residues)
    if (mod_reduce(b, Q.order) != 0) return false;
  return true;
}

Int monomial_weight(const Monomial& m, const WeightVector& a) {
  require_weights(a);
  if (m.size() != a.size()) throw std::invalid_argument("exponent count mismatch");
  Int w = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) throw std::invalid_argument("exponents must be nonnegative");
    w += a[i] * m[i];
  }
  return w;
}

std::vector<Monomial> ideal_generators(const WeightVector& a, const Int& c) {
  require_weights(a);
  if (c < 0) throw std::invalid_argument("threshold must be nonnegative");
  const int n = static_cast<int>(a.size());
  if (c == 0) return {Monomial(static_cast<size_t>(n), 0)};

  // any minimal generator has exponent at most ceil(c / a_i) in variable i
  std::vector<int> bound(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Int b = (c + a[static_cast<size_t>(i)] - 1) / a[static_cast<size_t>(i)];
    bound[static_cast<size_t>(i)] = b.convert_to<int>();
  }
  std::vector<Monomial> out;
  Monomial m(static_cast<size_t>(n), 0);
  while (true) {
    Int w = 0;
    for (int i = 0; i < n; ++i) w += a[static_cast<size_t>(i)] * m[static_cast<size_t>(i)];
    if (w >= c) {
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i)
        if (m[static_cast<size_t>(i)] > 0 && w - a[static_cast<size_t>(i)] >= c)
          minimal = false;
      if (minimal) out.push_back(m);
    }
    int pos = 0;
    while (pos < n && m[static_cast<size_t>(pos)] == bound[static_cast<size_t>(pos)]) {
      m[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++m[static_cast<size_t>(pos)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool verify_Ic_claim(int s, int t, const Int& d) {
  if (s < 1 || t < 1 || s + t > 6)
    throw std::invalid_argument("desk scale exceeded: need s, t >= 1 and s + t <= 6");
  if (d < 1 || d > 6) throw std::invalid_argument("desk scale exceeded: need 1 <= d <= 6");
  const WeightVector a = repeated_weights(d, s, t);
  const int n = s + t;
  for (Int c = 1; c <= d; ++c) {
    std::vector<Monomial> split;
    for (int i = 0; i < s; ++i) {
      Monomial e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      split.push_back(std::move(e));
    }
    const int cc = c.convert_to<int>();
    Monomial m(static_cast<size_t>(n), 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
      if (pos == n - 1) {
        m[static_cast<size_t>(pos)] = left;
        split.push_back(m);
        m[static_cast<size_t>(pos)] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        m[static_cast<size_t>(pos)] = v;
        fill(pos + 1, left - v);
      }
      m[static_cast<size_t>(pos)] = 0;
    };
    fill(s, cc);

    const std::vector<Monomial> gens = ideal_generators(a, c);
    for (const auto& g : gens)
      if (!covered_by(split, g)) return false;
    for (const auto& h : split)
      if (!covered_by(gens, h)) return false;
  }
  return true;
}

std::vector<ChartDescription> charts(const WeightVector& a) {
  require_weights(a);
  const int n = static_cast<int>(a.size());
  std::vector<ChartDescription> out;
  for (int i = 0; i < n; ++i) {
    ChartDescription ch;
    ch.index = i;
    ch.quotient.order = a[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j)
      ch.quotient.residues.push_back(
          mod_reduce(j == i ? Int(1) : -a[static_cast<size_t>(j)], ch.quotient.order));
    MatZ P(n, n);
    P.setZero();
    for (int j = 0; j < n; ++j) {
      if (j == i) {
        P(i, i) = a[static_cast<size_t>(i)];
      } else {
        P(j, j) = 1;
        P(i, j) = a[static_cast<size_t>(j)];
      }
    }
    ch.projection = std::move(P);
    out.push_back(std::move(ch));
  }
  return out;
}

std::vector<CyclicQuotient> classify_singularities(const WeightVector& a) {
  std::vector<CyclicQuotient> out;
  for (const ChartDescription& ch : charts(a)) out.push_back(canonical(ch.quotient));
  return out;
}

DiscrepancyReport blowup_discrepancy(const WeightVector& a) {
  require_weights(a);
  Int total = 0;
  for (const Int& w : a) total += w;
  return DiscrepancyReport{total - 1, total};
}

Rat toric_discrepancy(const CyclicQuotient& Q, const VecQ& v) {
  require_quotient(Q);
  if (v.size() != static_cast<Eigen::Index>(Q.residues.size()))
    throw std::invalid_argument("point dimension does not match the quotient");
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) throw std::invalid_argument("point outside the nonnegative orthant");
  if (!lattice_member(Q, v))
    throw std::invalid_argument("point is not in the quotient lattice");
  if (!lattice_primitive(Q, v))
    throw std::invalid_argument("point is not primitive in the quotient lattice");
  Rat total = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) total += v(i);
  return total - 1;
}

ResolutionTower resolution_tower(const Int& d, int t) {
  if (d < 2) throw std::invalid_argument("order must be at least 2");
  if (t < 1) throw std::invalid_argument("need at least one tail coordinate");
  ResolutionTower tw;
  tw.input = residual_quotient(d, t);
  for (Int i = 1; i < d; ++i) {
    TowerStep st;
    st.level = i;
    st.divisor_weights = repeated_weights(d - i, 1, t);
    st.step_discrepancy = Rat(Int(t - 1), d - i + 1);
    VecQ v(t + 1);
    v(0) = Rat(d - i, d);
    for (int j = 1; j <= t; ++j) v(j) = Rat(i, d);
    st.cumulative_discrepancy = toric_discrepancy(tw.input, v);
    st.residual = residual_quotient(d - i, t);
    tw.steps.push_back(std::move(st));
  }
  return tw;
}

ScanResult minimal_discrepancy_scan(const Int& d, int t, const Rat& bound) {
  if (d < 1) throw std::invalid_argument("order must be positive");
  if (t < 1) throw std::invalid_argument("need at least one tail coordinate");
  if (bound < Rat(Int(t - 1) + d, d))
    throw std::invalid_argument("bound excludes even the first exceptional divisor");
  const int n = t + 1;
  const CyclicQuotient Q = residual_quotient(d, t);

  // enumerate in scaled integers w = d*v with every w_i >= 1 and sum(w) <= d*bound
  const Rat scaled = bound * Rat(d);
  const Int wmax = num(scaled) / den(scaled);
  std::vector<VecQ> candidates;
  std::vector<Int> w(static_cast<size_t>(n), 1);
  while (true) {
    Int total = 0;
    for (const Int& x : w) total += x;
    if (total <= wmax) {
      VecQ v(n);
      for (int i = 0; i < n; ++i) v(i) = Rat(w[static_cast<size_t>(i)], d);
      if (lattice_member(Q, v) && lattice_primitive(Q, v)) candidates.push_back(v);
    }
    int pos = 0;
    while (pos < n && w[static_cast<size_t>(pos)] == wmax) {
      w[static_cast<size_t>(pos)] = 1;
      ++pos;
    }
    if (pos == n) break;
    ++w[static_cast<size_t>(pos)];
  }
  if (candidates.empty())
    throw std::invalid_argument("bound admits no interior lattice points");

  auto vec_less = [](const VecQ& a, const VecQ& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  };
  auto scan_order = [&](bool reversed) {
    ScanResult r;
    size_t hits = 0;
    bool first = true;
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
      const VecQ& v = candidates[reversed ? candidates.size() - 1 - idx : idx];
      Rat disc = -1;
      for (Eigen::Index i = 0; i < v.size(); ++i) disc += v(i);
      if (first || disc < r.minimum) {
        r.minimum = disc;
        r.attaining = v;
        hits = 1;
        first = false;
      } else if (disc == r.minimum) {
        ++hits;
        if (vec_less(v, r.attaining)) r.attaining = v;
      }
    }
    r.unique = hits == 1;
    return std::pair<ScanResult, size_t>(r, hits);
  };
  auto [fwd, fwd_hits] = scan_order(false);
  auto [rev, rev_hits] = scan_order(true);
  if (fwd.minimum != rev.minimum || fwd_hits != rev_hits ||
      !exact_eq(fwd.attaining, rev.attaining))
    throw std::logic_error("enumeration order changed the scan result");

  if (d >= 2 && t >= 2) {
    VecQ expected(n);
    expected(0) = Rat(d - 1, d);
    for (int j = 1; j <= t; ++j) expected(j) = Rat(1, d);
    if (fwd.minimum != Rat(Int(t - 1), d) || !fwd.unique ||
        !exact_eq(fwd.attaining, expected))
      throw std::logic_error("scan contradicts the expected minimal divisor");
  }
  return fwd;
}

PolarizationCoefficients polarization_coefficients(const std::vector<Rat>& e) {
  if (e.empty()) throw std::invalid_argument("need at least one coefficient");
  for (const Rat& x : e)
    if (x <= 0) throw std::invalid_argument("coefficients must be positive");
  PolarizationCoefficients out;
  out.c = 1;
  for (size_t i = 0; i < e.size(); ++i) {
    out.b.push_back(Int(i) + 1);
    Rat ratio = Rat(out.b.back()) / e[i];
    Int ceil_ratio = (num(ratio) + den(ratio) - 1) / den(ratio);
    out.c = std::max(out.c, ceil_ratio);
  }
  return out;
}

}  // namespace toricgit
