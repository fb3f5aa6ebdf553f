#include "toricgit/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "toricgit/feasible.hpp"
#include "toricgit/linalg.hpp"

namespace toricgit {

namespace {

std::vector<Int> vec_key(const VecZ& v) {
  std::vector<Int> key(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) key[static_cast<size_t>(i)] = v(i);
  return key;
}

MatZ from_columns(const std::vector<VecZ>& cols, Eigen::Index n) {
  MatZ m(n, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

MatZ from_rows(const std::vector<VecZ>& rows, Eigen::Index n) {
  MatZ m(static_cast<Eigen::Index>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

Eigen::Index ambient(const FacetSystem& F) {
  Eigen::Index n = std::max(F.eq.cols(), F.ineq.cols());
  if ((F.eq.rows() > 0 && F.eq.cols() != n) || (F.ineq.rows() > 0 && F.ineq.cols() != n))
    throw std::invalid_argument("cone: blocks disagree on the ambient dimension");
  return n;
}

// lambda >= 0 (strict on the listed positions), s > 0 with G lambda = s x.
bool combination_exists(const MatZ& G, const VecQ& x, bool all_strict) {
  Eigen::Index n = G.rows(), k = G.cols();
  if (x.size() != n) throw std::invalid_argument("cone: point dimension mismatch");
  MatQ eq(n, k + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) eq(i, j) = Rat(G(i, j));
    eq(i, k) = -x(i);
  }
  MatQ lam = MatQ::Zero(k, k + 1);
  for (Eigen::Index j = 0; j < k; ++j) lam(j, j) = 1;
  MatQ s = MatQ::Zero(1, k + 1);
  s(0, k) = 1;
  MatQ weak(0, k + 1), strict(0, k + 1);
  if (all_strict) {
    strict = MatQ(k + 1, k + 1);
    strict.topRows(k) = lam;
    strict.bottomRows(1) = s;
  } else {
    weak = lam;
    strict = s;
  }
  return feasible(eq, weak, strict).has_value();
}

// Whether ray r is a nonnegative combination of the other rays.
bool ray_redundant(const VecZ& r, const std::vector<VecZ>& others) {
  if (others.empty()) return false;
  MatZ G = from_columns(others, r.size());
  return combination_exists(G, to_rational(r), false);
}

}  // namespace

GeneratorSystem cone_from_halfspaces(const FacetSystem& F) {
  Eigen::Index n = ambient(F);
  if (n > 16) throw std::runtime_error("cone: ambient dimension too large for ray enumeration");

  // All constraints as inequality rows; equalities contribute both signs.
  std::vector<VecZ> arows;
  std::set<std::vector<Int>> seen;
  auto push = [&](VecZ v) {
    v = primitive(v);
    if (exact_zero(v)) return;
    if (seen.insert(vec_key(v)).second) arows.push_back(std::move(v));
  };
  for (Eigen::Index i = 0; i < F.ineq.rows(); ++i) push(F.ineq.row(i).transpose());
  for (Eigen::Index i = 0; i < F.eq.rows(); ++i) {
    push(F.eq.row(i).transpose());
    push(-F.eq.row(i).transpose());
  }
  MatZ A = from_rows(arows, n);

  // Lineality = exact kernel; the pointed part lives in a coordinate
  // complement of it, chosen among the standard basis vectors.
  MatZ K = integer_kernel(A);
  Eigen::Index m = n - K.rows();
  MatZ lineality = K.transpose();
  if (m == 0) return {lineality, MatZ(n, 0)};

  std::vector<Eigen::Index> coords;
  MatQ acc = to_rational(K);
  for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(coords.size()) < m; ++i) {
    MatQ trial(acc.rows() + 1, n);
    trial.topRows(acc.rows()) = acc;
    trial.bottomRows(1) = MatQ::Zero(1, n);
    trial(acc.rows(), i) = 1;
    if (rank(trial) > rank(acc)) {
      coords.push_back(i);
      acc = trial;
    }
  }
  MatZ W = MatZ::Zero(n, m);
  for (Eigen::Index t = 0; t < m; ++t) W(coords[static_cast<size_t>(t)], t) = 1;
  MatZ B = A * W;  // rank m by construction

  // Seed with m independent rows: that simplicial cone's rays are the
  // columns of the inverse, tight on all seed rows but one.
  std::vector<Eigen::Index> seed;
  MatQ chosen(0, m);
  for (Eigen::Index i = 0; i < B.rows() && static_cast<Eigen::Index>(seed.size()) < m; ++i) {
    MatQ trial(chosen.rows() + 1, m);
    trial.topRows(chosen.rows()) = chosen;
    trial.bottomRows(1) = to_rational(MatZ(B.row(i)));
    if (rank(trial) > rank(chosen)) {
      seed.push_back(i);
      chosen = trial;
    }
  }
  MatQ B0 = chosen;
  std::vector<VecZ> rays;
  for (Eigen::Index j = 0; j < m; ++j) {
    VecQ e = VecQ::Zero(m);
    e(j) = 1;
    auto y = solve_linear(B0, e);
    if (!y) throw std::logic_error("cone: seed system not invertible");
    rays.push_back(clear_denominators(*y));
  }

  // Insert the remaining halfspaces one at a time.
  std::vector<bool> used(static_cast<size_t>(B.rows()), false);
  for (Eigen::Index i : seed) used[static_cast<size_t>(i)] = true;
  for (Eigen::Index i = 0; i < B.rows(); ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    VecZ h = B.row(i).transpose();
    std::vector<VecZ> keep, pos, neg;
    for (const VecZ& r : rays) {
      Int d = h.dot(r);
      if (d > 0)
        pos.push_back(r);
      else if (d < 0)
        neg.push_back(r);
      else
        keep.push_back(r);
    }
    std::set<std::vector<Int>> next_seen;
    std::vector<VecZ> next;
    auto add = [&](VecZ v) {
      v = primitive(v);
      if (next_seen.insert(vec_key(v)).second) next.push_back(std::move(v));
    };
    for (const VecZ& p : pos)
      for (const VecZ& q : neg) {
        VecZ comb = h.dot(p) * q - h.dot(q) * p;
        add(std::move(comb));
      }
    for (VecZ& r : keep) add(std::move(r));
    for (VecZ& r : pos) add(std::move(r));
    rays = std::move(next);
    if (rays.size() > 5000) throw std::runtime_error("cone: ray enumeration grew too large");
  }

  // Keep exactly the extreme rays: drop any ray generated by the others.
  for (size_t i = 0; i < rays.size();) {
    std::vector<VecZ> others;
    for (size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (ray_redundant(rays[i], others))
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  std::vector<VecZ> xrays;
  for (const VecZ& r : rays) xrays.push_back(primitive(W * r));
  std::sort(xrays.begin(), xrays.end(),
            [](const VecZ& a, const VecZ& b) { return vec_key(a) < vec_key(b); });
  return {lineality, from_columns(xrays, n)};
}

FacetSystem facets(const MatZ& generators) {
  Eigen::Index n = generators.rows();
  FacetSystem dual;
  dual.eq = MatZ(0, n);
  dual.ineq = generators.transpose();
  GeneratorSystem D = cone_from_halfspaces(dual);
  FacetSystem out;
  out.eq = D.lineality.transpose();
  out.ineq = D.rays.transpose();
  return out;
}

MatZ spanning_columns(const GeneratorSystem& G) {
  Eigen::Index n = std::max(G.lineality.rows(), G.rays.rows());
  MatZ cols(n, 2 * G.lineality.cols() + G.rays.cols());
  Eigen::Index at = 0;
  for (Eigen::Index j = 0; j < G.lineality.cols(); ++j) {
    cols.col(at++) = G.lineality.col(j);
    cols.col(at++) = -G.lineality.col(j);
  }
  for (Eigen::Index j = 0; j < G.rays.cols(); ++j) cols.col(at++) = G.rays.col(j);
  return cols;
}

FacetSystem facets(const GeneratorSystem& G) { return facets(spanning_columns(G)); }

bool cone_contains(const FacetSystem& F, const VecQ& x) {
  Eigen::Index n = ambient(F);
  if (x.size() != n) throw std::invalid_argument("cone: point dimension mismatch");
  for (Eigen::Index i = 0; i < F.eq.rows(); ++i) {
    Rat v = 0;
    for (Eigen::Index j = 0; j < n; ++j) v += Rat(F.eq(i, j)) * x(j);
    if (v != 0) return false;
  }
  for (Eigen::Index i = 0; i < F.ineq.rows(); ++i) {
    Rat v = 0;
    for (Eigen::Index j = 0; j < n; ++j) v += Rat(F.ineq(i, j)) * x(j);
    if (v < 0) return false;
  }
  return true;
}

bool cone_contains_relint(const FacetSystem& F, const VecQ& x) {
  Eigen::Index n = ambient(F);
  if (x.size() != n) throw std::invalid_argument("cone: point dimension mismatch");
  for (Eigen::Index i = 0; i < F.eq.rows(); ++i) {
    Rat v = 0;
    for (Eigen::Index j = 0; j < n; ++j) v += Rat(F.eq(i, j)) * x(j);
    if (v != 0) return false;
  }
  for (Eigen::Index i = 0; i < F.ineq.rows(); ++i) {
    Rat v = 0;
    for (Eigen::Index j = 0; j < n; ++j) v += Rat(F.ineq(i, j)) * x(j);
    if (v <= 0) return false;
  }
  return true;
}

bool in_cone(const MatZ& generators, const VecQ& x) {
  return combination_exists(generators, x, false);
}

bool in_cone_relint(const MatZ& generators, const VecQ& x) {
  return combination_exists(generators, x, true);
}

FacetSystem intersect(const FacetSystem& A, const FacetSystem& B) {
  Eigen::Index n = ambient(A);
  if (ambient(B) != n) throw std::invalid_argument("cone: intersect dimension mismatch");
  FacetSystem joint;
  joint.eq = MatZ(A.eq.rows() + B.eq.rows(), n);
  joint.eq.topRows(A.eq.rows()) = A.eq;
  joint.eq.bottomRows(B.eq.rows()) = B.eq;
  joint.ineq = MatZ(A.ineq.rows() + B.ineq.rows(), n);
  joint.ineq.topRows(A.ineq.rows()) = A.ineq;
  joint.ineq.bottomRows(B.ineq.rows()) = B.ineq;
  return facets(cone_from_halfspaces(joint));
}

bool is_zero_cone(const FacetSystem& F) {
  Eigen::Index n = ambient(F);
  GeneratorSystem G = cone_from_halfspaces(F);
  bool by_rays = G.lineality.cols() == 0 && G.rays.cols() == 0;

  bool by_signs = true;
  MatQ eq = to_rational(F.eq);
  MatQ weak = to_rational(F.ineq);
  for (Eigen::Index i = 0; i < n && by_signs; ++i)
    for (int sgn : {1, -1}) {
      MatQ strict = MatQ::Zero(1, n);
      strict(0, i) = sgn;
      if (feasible(eq, weak, strict).has_value()) {
        by_signs = false;
        break;
      }
    }
  if (by_rays != by_signs) throw std::logic_error("cone: zero tests disagree");
  return by_rays;
}

bool cone_equals(const GeneratorSystem& A, const GeneratorSystem& B) {
  MatZ ga = spanning_columns(A), gb = spanning_columns(B);
  for (Eigen::Index j = 0; j < ga.cols(); ++j)
    if (!in_cone(gb, to_rational(VecZ(ga.col(j))))) return false;
  for (Eigen::Index j = 0; j < gb.cols(); ++j)
    if (!in_cone(ga, to_rational(VecZ(gb.col(j))))) return false;
  return true;
}

}  // namespace toricgit
