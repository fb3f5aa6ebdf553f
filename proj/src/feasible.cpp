#include "toricgit/feasible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace toricgit {

namespace {

// One inequality a . x >= c over the free variables.
struct Row {
  VecQ a;
  Rat c;
};

std::vector<Int> row_key(const Row& r) {
  VecQ full(r.a.size() + 1);
  full.head(r.a.size()) = r.a;
  full(r.a.size()) = r.c;
  VecZ p = clear_denominators(full);
  std::vector<Int> key(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) key[static_cast<size_t>(i)] = p(i);
  return key;
}

// Drop duplicates and tautologies; returns false on a row 0 >= c with c > 0.
bool canonicalize(std::vector<Row>& rows) {
  std::set<std::vector<Int>> seen;
  std::vector<Row> out;
  for (Row& r : rows) {
    if (exact_zero(r.a)) {
      if (r.c > 0) return false;
      continue;
    }
    if (seen.insert(row_key(r)).second) out.push_back(std::move(r));
  }
  rows = std::move(out);
  return true;
}

// Fourier-Motzkin over m variables; returns an exact witness when feasible.
std::optional<VecQ> fm_solve(std::vector<Row> rows, Eigen::Index m) {
  if (!canonicalize(rows)) return std::nullopt;
  std::vector<std::pair<Eigen::Index, std::vector<Row>>> stages;
  for (Eigen::Index v = 0; v < m; ++v) {
    std::vector<const Row*> pos, neg;
    std::vector<Row> next;
    for (const Row& r : rows) {
      if (r.a(v) > 0)
        pos.push_back(&r);
      else if (r.a(v) < 0)
        neg.push_back(&r);
      else
        next.push_back(r);
    }
    if (pos.empty() && neg.empty()) continue;
    for (const Row* p : pos)
      for (const Row* q : neg) {
        // Positive combination cancelling variable v: (-q_v) p + p_v q.
        Row comb;
        comb.a = (-q->a(v)) * p->a + p->a(v) * q->a;
        comb.c = (-q->a(v)) * p->c + p->a(v) * q->c;
        next.push_back(std::move(comb));
      }
    stages.emplace_back(v, std::move(rows));
    rows = std::move(next);
    if (!canonicalize(rows)) return std::nullopt;
    if (rows.size() > 200000) throw std::runtime_error("feasibility system grew too large");
  }
  // All remaining rows were constant and consistent; back-substitute.
  VecQ x = VecQ::Zero(m);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    Eigen::Index v = it->first;
    bool has_lo = false, has_hi = false;
    Rat lo = 0, hi = 0;
    for (const Row& r : it->second) {
      if (r.a(v) == 0) continue;
      Rat rest = r.c;
      for (Eigen::Index k = 0; k < m; ++k)
        if (k != v) rest -= r.a(k) * x(k);
      Rat bound = rest / r.a(v);
      if (r.a(v) > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    x(v) = has_lo ? lo : (has_hi ? hi : Rat(0));
  }
  return x;
}

Eigen::Index common_columns(const MatQ& eq, const MatQ& weak, const MatQ& strict) {
  Eigen::Index n = std::max({eq.cols(), weak.cols(), strict.cols()});
  for (const MatQ* m : {&eq, &weak, &strict})
    if (m->rows() > 0 && m->cols() != n)
      throw std::invalid_argument("feasible: blocks disagree on the number of variables");
  return n;
}

}  // namespace

std::optional<VecQ> feasible(const MatQ& eq, const MatQ& weak, const MatQ& strict) {
  Eigen::Index n = common_columns(eq, weak, strict);

  // Gaussian presolve of the equalities: pivots kept mutually reduced, so
  // each pivot row mentions only free columns besides its own.
  std::vector<std::pair<Eigen::Index, VecQ>> pivots;
  auto reduce = [&](VecQ r) {
    for (const auto& [j, e] : pivots) {
      Rat f = r(j);
      if (f != 0) r -= f * e;
    }
    return r;
  };
  for (Eigen::Index i = 0; i < eq.rows(); ++i) {
    VecQ r = reduce(eq.row(i).transpose());
    Eigen::Index j = -1;
    for (Eigen::Index k = 0; k < n; ++k)
      if (r(k) != 0) {
        j = k;
        break;
      }
    if (j < 0) continue;
    VecQ e = r / r(j);
    for (auto& [k, p] : pivots) {
      Rat f = p(j);
      if (f != 0) p -= f * e;
    }
    pivots.emplace_back(j, e);
  }

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (const auto& [j, e] : pivots) is_pivot[static_cast<size_t>(j)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index k = 0; k < n; ++k)
    if (!is_pivot[static_cast<size_t>(k)]) free_cols.push_back(k);
  Eigen::Index m = static_cast<Eigen::Index>(free_cols.size());

  auto compress = [&](const VecQ& r, const Rat& c) {
    Row row;
    row.a = VecQ(m);
    for (Eigen::Index t = 0; t < m; ++t) row.a(t) = r(free_cols[static_cast<size_t>(t)]);
    row.c = c;
    return row;
  };
  std::vector<Row> rows;
  for (Eigen::Index i = 0; i < weak.rows(); ++i)
    rows.push_back(compress(reduce(weak.row(i).transpose()), Rat(0)));
  for (Eigen::Index i = 0; i < strict.rows(); ++i)
    rows.push_back(compress(reduce(strict.row(i).transpose()), Rat(1)));

  auto sol = fm_solve(std::move(rows), m);
  if (!sol) return std::nullopt;

  VecQ x = VecQ::Zero(n);
  for (Eigen::Index t = 0; t < m; ++t) x(free_cols[static_cast<size_t>(t)]) = (*sol)(t);
  for (const auto& [j, e] : pivots) {
    Rat acc = 0;
    for (Eigen::Index k = 0; k < n; ++k)
      if (k != j) acc += e(k) * x(k);
    x(j) = -acc;
  }

  // The witness must satisfy the original blocks exactly.
  for (Eigen::Index i = 0; i < eq.rows(); ++i)
    if (eq.row(i).transpose().dot(x) != 0) throw std::logic_error("feasible: witness violates an equality");
  for (Eigen::Index i = 0; i < weak.rows(); ++i)
    if (weak.row(i).transpose().dot(x) < 0) throw std::logic_error("feasible: witness violates a weak row");
  for (Eigen::Index i = 0; i < strict.rows(); ++i)
    if (strict.row(i).transpose().dot(x) <= 0) throw std::logic_error("feasible: witness violates a strict row");
  return x;
}

std::optional<VecQ> feasible(const MatZ& eq, const MatZ& weak, const MatZ& strict) {
  return feasible(to_rational(eq), to_rational(weak), to_rational(strict));
}

}  // namespace toricgit
