#include "toricgit/plane_curve.hpp"

#include <stdexcept>

namespace toricgit {

VecZ normalize(const OnePS& l) {
  VecZ w = l.w;
  const Eigen::Index n = w.size();
  if (n == 0) return w;
  Int s = 0;
  for (Eigen::Index i = 0; i < n; ++i) s += w(i);
  if (s % n == 0) {
    Int avg = s / n;
    for (Eigen::Index i = 0; i < n; ++i) w(i) -= avg;
  } else {
    for (Eigen::Index i = 0; i < n; ++i) w(i) = w(i) * n - s;
  }
  return w;
}

Int plane_curve_min_weight(long d, long m, const OnePS& l) {
  if (m < 0 || m > d) throw std::invalid_argument("multiplicity must satisfy 0 <= m <= d");
  VecZ w = normalize(l);
  if (w.size() != 3) throw std::invalid_argument("plane curves need three weights");
  // For fixed z-degree c the minimum puts the rest on the lighter of x, y.
  Int wxy = w(0) < w(1) ? w(0) : w(1);
  bool first = true;
  Int best = 0;
  for (long c = 0; c <= d - m; ++c) {
    Int v = Int(c) * w(2) + Int(d - c) * wxy;
    if (first || v < best) best = v, first = false;
  }
  return best;
}

bool genus_condition(long d, long m) {
  return 2 * binomial(m, 2) < binomial(d - 1, 2);
}

std::vector<UnstableSmoothable> find_unstable_smoothable(long d_max) {
  std::vector<UnstableSmoothable> out;
  OnePS lambda{vecz({1, 1, -2})};
  for (long d = 1; d <= d_max; ++d)
    for (long m = 0; m <= d; ++m) {
      if (3 * m <= 2 * d) continue;  // weight 3m - 2d must be positive
      if (!genus_condition(d, m)) continue;
      out.push_back(UnstableSmoothable{d, m, plane_curve_min_weight(d, m, lambda)});
    }
  return out;
}

}  // namespace toricgit
