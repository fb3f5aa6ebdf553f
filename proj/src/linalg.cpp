#include "toricgit/linalg.hpp"

namespace toricgit {
namespace {

// g = gcd(a,b) >= 0 together with p*a + q*b = g.
struct Xgcd {
  Int g, p, q;
};

Xgcd xgcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;  // truncated division is fine: invariants hold over Z
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// floor division for the above-pivot reduction
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const MatZ& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  MatZ H = M;
  MatZ U = MatZ::Identity(m, m);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (H(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      H.row(r).swap(H.row(piv));
      U.row(r).swap(U.row(piv));
    }
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (H(i, c) == 0) continue;
      const auto [g, p, q] = xgcd(H(r, c), H(i, c));
      const Int a = H(r, c) / g, b = H(i, c) / g;
      // [p q; -b a] has determinant 1 and sends (H(r,c), H(i,c)) to (g, 0)
      MatZ row_r = p * H.row(r) + q * H.row(i);
      MatZ row_i = -b * H.row(r) + a * H.row(i);
      H.row(r) = row_r;
      H.row(i) = row_i;
      MatZ u_r = p * U.row(r) + q * U.row(i);
      MatZ u_i = -b * U.row(r) + a * U.row(i);
      U.row(r) = u_r;
      U.row(i) = u_i;
    }
    if (H(r, c) < 0) {
      H.row(r) = -H.row(r);
      U.row(r) = -U.row(r);
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      if (H(i, c) == 0) continue;
      const Int f = fdiv(H(i, c), H(r, c));
      if (f != 0) {
        H.row(i) -= f * H.row(r);
        U.row(i) -= f * U.row(r);
      }
    }
    ++r;
  }
  return {std::move(H), std::move(U)};
}

MatZ integer_kernel(const MatZ& M) {
  // U * M^T = H; rows of U facing zero rows of H form a saturated basis of
  // {v : M v = 0}.
  MatZ Mt = M.transpose();
  const auto hr = hermite_normal_form(Mt);
  std::vector<Eigen::Index> zero_rows;
  for (Eigen::Index i = 0; i < hr.H.rows(); ++i)
    if (exact_zero(hr.H.row(i))) zero_rows.push_back(i);
  MatZ K(static_cast<Eigen::Index>(zero_rows.size()), M.cols());
  for (std::size_t t = 0; t < zero_rows.size(); ++t) K.row(static_cast<Eigen::Index>(t)) = hr.U.row(zero_rows[t]);
  return K;
}

MatZ lattice_canonical_basis(const MatZ& rows) {
  const auto hr = hermite_normal_form(rows);
  Eigen::Index nonzero = 0;
  for (Eigen::Index i = 0; i < hr.H.rows(); ++i)
    if (!exact_zero(hr.H.row(i))) ++nonzero;
  return hr.H.topRows(nonzero);
}

bool lattice_equal(const MatZ& rows_a, const MatZ& rows_b) {
  if (rows_a.cols() != rows_b.cols()) return false;
  return exact_eq(lattice_canonical_basis(rows_a), lattice_canonical_basis(rows_b));
}

bool lattice_contains(const MatZ& rows, const VecZ& v) {
  if (rows.cols() != v.size()) throw std::invalid_argument("lattice_contains: size mismatch");
  const MatZ B = lattice_canonical_basis(rows);
  // Solve x^T B = v^T over Q, then check integrality. B has independent rows.
  MatZ Bt = B.transpose();
  auto x = solve_linear(to_rational(Bt), to_rational(v));
  if (!x) return false;
  for (Eigen::Index i = 0; i < x->size(); ++i)
    if (den((*x)(i)) != 1) return false;
  return true;
}

Int determinant(const MatZ& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  MatZ A = M;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      A.row(k).swap(A.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;  // exact by Bareiss
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : Int(-A(n - 1, n - 1));
}

namespace {

// Row echelon over Q in place; returns pivot columns.
std::vector<Eigen::Index> echelon(MatQ& A) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < A.cols() && r < A.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < A.rows(); ++i)
      if (A(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) A.row(r).swap(A.row(piv));
    A.row(r) /= A(r, c);
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (i != r && A(i, c) != 0) A.row(i) -= A(i, c) * A.row(r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Eigen::Index rank(const MatQ& M) {
  MatQ A = M;
  return static_cast<Eigen::Index>(echelon(A).size());
}

Eigen::Index rank(const MatZ& M) { return rank(to_rational(M)); }

std::optional<VecQ> solve_linear(const MatQ& A, const VecQ& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  MatQ aug(A.rows(), A.cols() + 1);
  aug.leftCols(A.cols()) = A;
  aug.col(A.cols()) = b;
  const auto pivots = echelon(aug);
  // Inconsistent iff a pivot lands in the last column.
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  VecQ x = VecQ::Zero(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), A.cols());
  return x;
}

std::vector<VecQ> kernel_basis(const MatQ& A) {
  MatQ E = A;
  const auto pivots = echelon(E);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VecQ> basis;
  for (Eigen::Index free = 0; free < A.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VecQ v = VecQ::Zero(A.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -E(static_cast<Eigen::Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace toricgit
