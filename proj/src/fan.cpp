#include "toricgit/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "toricgit/feasible.hpp"
#include "toricgit/linalg.hpp"

namespace toricgit {

namespace {

constexpr Eigen::Index kMaxRaysForEnumeration = 16;

std::vector<Eigen::Index> sorted_cone(const std::vector<Eigen::Index>& c) {
  std::vector<Eigen::Index> s = c;
  std::sort(s.begin(), s.end());
  return s;
}

MatZ columns(const MatZ& m, const std::vector<Eigen::Index>& idx) {
  MatZ out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = m.col(idx[k]);
  return out;
}

GeneratorSystem generators_of(const MatZ& cols) {
  GeneratorSystem G;
  G.lineality = MatZ(cols.rows(), 0);
  G.rays = cols;
  return G;
}

// Structurally sound cone: nonempty, in-range distinct indices,
// linearly independent rays.
bool cone_usable(const Fan& F, const std::vector<Eigen::Index>& cone) {
  if (cone.empty()) return false;
  std::set<Eigen::Index> seen;
  for (Eigen::Index i : cone) {
    if (i < 0 || i >= F.rays.cols()) return false;
    if (!seen.insert(i).second) return false;
  }
  return rank(columns(F.rays, cone)) == static_cast<Eigen::Index>(cone.size());
}

bool subset_of(const std::vector<Eigen::Index>& a, const std::vector<Eigen::Index>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

struct WallData {
  size_t cone_a = 0, cone_b = 0;
  std::vector<Eigen::Index> shared;  // n-1 ray indices
  Eigen::Index extra_a = 0, extra_b = 0;  // the ray each side adds
};

// Facet-sharing structure of a valid pure fan; empty optional when some
// facet is not shared by exactly two cones.
std::optional<std::vector<WallData>> walls_of(const Fan& F) {
  std::map<std::vector<Eigen::Index>, std::vector<size_t>> by_facet;
  for (size_t c = 0; c < F.max_cones.size(); ++c) {
    std::vector<Eigen::Index> cone = sorted_cone(F.max_cones[c]);
    for (size_t omit = 0; omit < cone.size(); ++omit) {
      std::vector<Eigen::Index> facet;
      for (size_t k = 0; k < cone.size(); ++k)
        if (k != omit) facet.push_back(cone[k]);
      by_facet[facet].push_back(c);
    }
  }
  std::vector<WallData> walls;
  for (const auto& [facet, owners] : by_facet) {
    if (owners.size() != 2) return std::nullopt;
    WallData w;
    w.cone_a = owners[0];
    w.cone_b = owners[1];
    w.shared = facet;
    for (Eigen::Index i : sorted_cone(F.max_cones[owners[0]]))
      if (!std::binary_search(facet.begin(), facet.end(), i)) w.extra_a = i;
    for (Eigen::Index i : sorted_cone(F.max_cones[owners[1]]))
      if (!std::binary_search(facet.begin(), facet.end(), i)) w.extra_b = i;
    walls.push_back(std::move(w));
  }
  return walls;
}

void check_collection_guard(Eigen::Index N) {
  if (N > kMaxRaysForEnumeration)
    throw std::invalid_argument("subset enumeration supports at most 16 rays");
}

// All maximal subsets of {0..N-1} containing no listed collection.
std::vector<std::vector<Eigen::Index>> maximal_free_subsets(
    Eigen::Index N, const std::vector<std::vector<Eigen::Index>>& collections) {
  check_collection_guard(N);
  std::vector<unsigned> coll_masks;
  for (const auto& c : collections) {
    unsigned m = 0;
    for (Eigen::Index i : c) m |= 1u << i;
    coll_masks.push_back(m);
  }
  auto free_of_collections = [&](unsigned s) {
    for (unsigned c : coll_masks)
      if ((s & c) == c) return false;
    return true;
  };
  std::vector<std::vector<Eigen::Index>> out;
  for (unsigned s = 0; s < (1u << N); ++s) {
    if (!free_of_collections(s)) continue;
    bool maximal = true;
    for (Eigen::Index j = 0; j < N && maximal; ++j)
      if (!(s & (1u << j)) && free_of_collections(s | (1u << j))) maximal = false;
    if (!maximal) continue;
    std::vector<Eigen::Index> subset;
    for (Eigen::Index j = 0; j < N; ++j)
      if (s & (1u << j)) subset.push_back(j);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

void validate_presentation(const CoxPresentation& P) {
  if (P.degrees.cols() != P.num_vars)
    throw std::invalid_argument("one degree column per variable required");
  check_collection_guard(P.num_vars);
  if (rank(P.degrees) != P.degrees.rows())
    throw std::invalid_argument("degree matrix must have full row rank");
  for (const auto& c : P.primitive_collections) {
    if (c.empty()) throw std::invalid_argument("empty primitive collection");
    std::set<Eigen::Index> seen;
    for (Eigen::Index i : c) {
      if (i < 0 || i >= P.num_vars)
        throw std::invalid_argument("collection index out of range");
      if (!seen.insert(i).second)
        throw std::invalid_argument("repeated index in a collection");
    }
  }
}

std::vector<std::vector<Eigen::Index>> orbit_supports(const CoxPresentation& P,
                                                      const Fan& F) {
  std::vector<std::vector<Eigen::Index>> supports;
  for (const auto& cone : F.max_cones) {
    std::vector<Eigen::Index> s;
    for (Eigen::Index j = 0; j < P.num_vars; ++j)
      if (std::find(cone.begin(), cone.end(), j) == cone.end()) s.push_back(j);
    supports.push_back(std::move(s));
  }
  return supports;
}

}  // namespace

FanDiagnostics validate_fan(const Fan& F) {
  FanDiagnostics d;
  auto add = [&](std::string what, std::vector<size_t> cones = {}) {
    d.problems.push_back(FanProblem{std::move(what), std::move(cones)});
  };
  if (F.rank < 1) {
    add("rank must be positive");
    return d;
  }
  if (F.rays.rows() != F.rank) {
    add("ray matrix must have one row per dimension");
    return d;
  }
  for (Eigen::Index j = 0; j < F.rays.cols(); ++j) {
    VecZ r = F.rays.col(j);
    if (exact_zero(r))
      add("ray " + std::to_string(j) + " is zero (must be primitive)");
    else if (!exact_eq(primitive(r), r))
      add("ray " + std::to_string(j) + " is not primitive");
  }
  for (Eigen::Index a = 0; a < F.rays.cols(); ++a)
    for (Eigen::Index b = a + 1; b < F.rays.cols(); ++b)
      if (exact_eq(VecZ(F.rays.col(a)), VecZ(F.rays.col(b))))
        add("rays must be distinct: " + std::to_string(a) + " and " + std::to_string(b));

  std::vector<bool> usable(F.max_cones.size(), true);
  for (size_t c = 0; c < F.max_cones.size(); ++c) {
    const auto& cone = F.max_cones[c];
    if (cone.empty()) {
      add("empty cone at position " + std::to_string(c), {c});
      usable[c] = false;
      continue;
    }
    bool shape_ok = true;
    std::set<Eigen::Index> seen;
    for (Eigen::Index i : cone) {
      if (i < 0 || i >= F.rays.cols()) {
        add("cone " + std::to_string(c) + " has a ray index out of range", {c});
        shape_ok = false;
        break;
      }
      if (!seen.insert(i).second) {
        add("cone " + std::to_string(c) + " has a repeated ray index", {c});
        shape_ok = false;
        break;
      }
    }
    if (!shape_ok) {
      usable[c] = false;
      continue;
    }
    if (rank(columns(F.rays, cone)) != static_cast<Eigen::Index>(cone.size())) {
      add("cone " + std::to_string(c) + " is not simplicial (dependent rays)", {c});
      usable[c] = false;
    }
  }

  for (size_t a = 0; a < F.max_cones.size(); ++a)
    for (size_t b = a + 1; b < F.max_cones.size(); ++b) {
      if (!usable[a] || !usable[b]) continue;
      std::vector<Eigen::Index> sa = sorted_cone(F.max_cones[a]);
      std::vector<Eigen::Index> sb = sorted_cone(F.max_cones[b]);
      if (subset_of(sa, sb) || subset_of(sb, sa)) {
        add("cone " + std::to_string(a) + " is contained in cone " + std::to_string(b) +
                " (or vice versa)",
            {a, b});
        continue;
      }
      MatZ ca = columns(F.rays, sa), cb = columns(F.rays, sb);
      FacetSystem inter = intersect(facets(ca), facets(cb));
      GeneratorSystem K = cone_from_halfspaces(inter);
      std::vector<Eigen::Index> in_a, in_b;
      for (size_t k = 0; k < sa.size(); ++k)
        if (cone_contains(inter, to_rational(VecZ(ca.col(static_cast<Eigen::Index>(k))))))
          in_a.push_back(static_cast<Eigen::Index>(k));
      for (size_t k = 0; k < sb.size(); ++k)
        if (cone_contains(inter, to_rational(VecZ(cb.col(static_cast<Eigen::Index>(k))))))
          in_b.push_back(static_cast<Eigen::Index>(k));
      bool face = cone_equals(K, generators_of(columns(ca, in_a))) &&
                  cone_equals(K, generators_of(columns(cb, in_b)));
      if (!face)
        add("cones " + std::to_string(a) + " and " + std::to_string(b) +
                " do not intersect in a common face",
            {a, b});
    }
  return d;
}

void require_valid(const Fan& F) {
  FanDiagnostics d = validate_fan(F);
  if (!d.ok()) throw std::invalid_argument("invalid fan: " + d.problems.front().what);
}

bool is_smooth(const Fan& F) {
  require_valid(F);
  for (const auto& cone : F.max_cones) {
    MatZ M = columns(F.rays, cone);
    MatZ H = hermite_normal_form(M).H;
    Eigen::Index nonzero = 0;
    for (Eigen::Index r = 0; r < H.rows(); ++r) {
      Eigen::Index pivot = -1;
      for (Eigen::Index c = 0; c < H.cols(); ++c)
        if (H(r, c) != 0) {
          pivot = c;
          break;
        }
      if (pivot < 0) continue;
      ++nonzero;
      if (H(r, pivot) != 1) return false;
    }
    if (nonzero != static_cast<Eigen::Index>(cone.size())) return false;
  }
  return true;
}

bool is_complete(const Fan& F) {
  require_valid(F);
  if (F.max_cones.empty()) return false;
  for (const auto& cone : F.max_cones)
    if (static_cast<Eigen::Index>(cone.size()) != F.rank) return false;
  return walls_of(F).has_value();
}

std::optional<SupportFunction> projective_support_function(const Fan& F) {
  require_valid(F);
  if (!is_complete(F))
    throw std::invalid_argument("support functions are defined for complete fans only");
  auto walls = walls_of(F);
  const Eigen::Index n = F.rank;
  const Eigen::Index m = static_cast<Eigen::Index>(F.max_cones.size());
  const Eigen::Index vars = n * m;

  Eigen::Index eq_rows = 0;
  for (const auto& w : *walls) eq_rows += static_cast<Eigen::Index>(w.shared.size());
  MatZ eq(eq_rows, vars), strict(static_cast<Eigen::Index>(walls->size()), vars);
  eq.setZero();
  strict.setZero();
  Eigen::Index er = 0;
  for (size_t wi = 0; wi < walls->size(); ++wi) {
    const WallData& w = (*walls)[wi];
    const Eigen::Index a = static_cast<Eigen::Index>(w.cone_a);
    const Eigen::Index b = static_cast<Eigen::Index>(w.cone_b);
    for (Eigen::Index g : w.shared) {
      for (Eigen::Index i = 0; i < n; ++i) {
        eq(er, a * n + i) = F.rays(i, g);
        eq(er, b * n + i) = -F.rays(i, g);
      }
      ++er;
    }
    // convexity kink: cone a's functional exceeds cone b's at b's extra ray
    for (Eigen::Index i = 0; i < n; ++i) {
      strict(static_cast<Eigen::Index>(wi), a * n + i) = F.rays(i, w.extra_b);
      strict(static_cast<Eigen::Index>(wi), b * n + i) = -F.rays(i, w.extra_b);
    }
  }

  auto sol = feasible(eq, MatZ(0, vars), strict);
  if (!sol) return std::nullopt;

  SupportFunction phi;
  phi.functionals = MatQ(n, m);
  for (Eigen::Index s = 0; s < m; ++s)
    for (Eigen::Index i = 0; i < n; ++i) phi.functionals(i, s) = (*sol)(s * n + i);

  auto value = [&](Eigen::Index cone_idx, Eigen::Index ray_idx) {
    Rat v = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      v += phi.functionals(i, cone_idx) * Rat(F.rays(i, ray_idx));
    return v;
  };
  for (const WallData& w : *walls) {
    const Eigen::Index a = static_cast<Eigen::Index>(w.cone_a);
    const Eigen::Index b = static_cast<Eigen::Index>(w.cone_b);
    for (Eigen::Index g : w.shared)
      if (value(a, g) != value(b, g))
        throw std::logic_error("support function witness fails wall agreement");
    if (!(value(a, w.extra_b) > value(b, w.extra_b)) ||
        !(value(b, w.extra_a) > value(a, w.extra_a)))
      throw std::logic_error("support function witness fails strict convexity");
  }
  return phi;
}

CoxPresentation cox_of_fan(const Fan& F) {
  require_valid(F);
  if (rank(F.rays) != F.rank)
    throw std::invalid_argument("rays must span the ambient space");
  const Eigen::Index N = F.rays.cols();
  check_collection_guard(N);

  CoxPresentation P;
  P.num_vars = N;
  P.degrees = integer_kernel(F.rays);
  MatZ saturation = integer_kernel(P.degrees);
  if (!lattice_equal(F.rays, saturation))
    throw std::invalid_argument("class group has torsion; unsupported");

  // minimal subsets lying in no cone
  std::vector<unsigned> cone_masks;
  for (const auto& cone : F.max_cones) {
    unsigned m = 0;
    for (Eigen::Index i : cone) m |= 1u << i;
    cone_masks.push_back(m);
  }
  auto in_some_cone = [&](unsigned s) {
    for (unsigned c : cone_masks)
      if ((s & c) == s) return true;
    return false;
  };
  for (unsigned s = 1; s < (1u << N); ++s) {
    if (in_some_cone(s)) continue;
    bool minimal = true;
    for (Eigen::Index j = 0; j < N && minimal; ++j)
      if ((s & (1u << j)) && !in_some_cone(s & ~(1u << j))) minimal = false;
    if (!minimal) continue;
    std::vector<Eigen::Index> subset;
    for (Eigen::Index j = 0; j < N; ++j)
      if (s & (1u << j)) subset.push_back(j);
    P.primitive_collections.push_back(std::move(subset));
  }
  std::sort(P.primitive_collections.begin(), P.primitive_collections.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return P;
}

Fan fan_of_cox(const CoxPresentation& P) {
  validate_presentation(P);
  const Eigen::Index N = P.num_vars;
  const Eigen::Index k = P.degrees.rows();
  MatZ K = integer_kernel(P.degrees);
  if (K.rows() != N - k)
    throw std::logic_error("kernel rank does not match the expected fan dimension");

  Fan F;
  F.rank = N - k;
  F.rays = K;
  F.max_cones = maximal_free_subsets(N, P.primitive_collections);
  FanDiagnostics d = validate_fan(F);
  if (!d.ok())
    throw std::invalid_argument("presentation does not define a fan: " + d.problems.front().what);
  return F;
}

std::optional<VecZ> git_ample_character(const CoxPresentation& P) {
  Fan F = fan_of_cox(P);
  const Eigen::Index k = P.degrees.rows();
  std::vector<std::vector<Eigen::Index>> supports = orbit_supports(P, F);
  std::vector<FacetSystem> systems;
  std::vector<MatZ> gens;
  for (const auto& s : supports) {
    gens.push_back(columns(P.degrees, s));
    systems.push_back(facets(gens.back()));
  }

  Eigen::Index eq_rows = 0, ineq_rows = 0;
  for (const auto& S : systems) eq_rows += S.eq.rows(), ineq_rows += S.ineq.rows();
  MatZ eq(eq_rows, k);
  Eigen::Index er = 0;
  for (const auto& S : systems)
    for (Eigen::Index i = 0; i < S.eq.rows(); ++i) eq.row(er++) = S.eq.row(i);

  for (Eigen::Index axis = 0; axis < k; ++axis) {
    for (int sign : {1, -1}) {
      MatZ strict(ineq_rows + 1, k);
      Eigen::Index ir = 0;
      for (const auto& S : systems)
        for (Eigen::Index i = 0; i < S.ineq.rows(); ++i) strict.row(ir++) = S.ineq.row(i);
      strict.row(ineq_rows).setZero();
      strict(ineq_rows, axis) = sign;
      if (auto x = feasible(eq, MatZ(0, k), strict)) {
        VecZ chi = clear_denominators(*x);
        for (const auto& g : gens)
          if (!in_cone_relint(g, to_rational(chi)))
            throw std::logic_error("ample character failed generator re-verification");
        return chi;
      }
    }
  }
  return std::nullopt;
}

Fan canonical_fan(const Fan& F) {
  MatZ H = hermite_normal_form(F.rays).H;
  const Eigen::Index N = H.cols();
  std::vector<Eigen::Index> order(static_cast<size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  auto col_less = [&](Eigen::Index a, Eigen::Index b) {
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      if (H(i, a) < H(i, b)) return true;
      if (H(i, b) < H(i, a)) return false;
    }
    return false;
  };
  std::stable_sort(order.begin(), order.end(), col_less);
  std::vector<Eigen::Index> position(static_cast<size_t>(N));
  for (Eigen::Index p = 0; p < N; ++p) position[static_cast<size_t>(order[static_cast<size_t>(p)])] = p;

  Fan C;
  C.rank = F.rank;
  C.rays = MatZ(H.rows(), N);
  for (Eigen::Index p = 0; p < N; ++p) C.rays.col(p) = H.col(order[static_cast<size_t>(p)]);
  for (const auto& cone : F.max_cones) {
    std::vector<Eigen::Index> c;
    for (Eigen::Index i : cone) c.push_back(position[static_cast<size_t>(i)]);
    std::sort(c.begin(), c.end());
    C.max_cones.push_back(std::move(c));
  }
  std::sort(C.max_cones.begin(), C.max_cones.end());
  return C;
}

bool fan_equals(const Fan& A, const Fan& B) {
  if (A.rank != B.rank || A.rays.cols() != B.rays.cols()) return false;
  Fan ca = canonical_fan(A), cb = canonical_fan(B);
  if (ca.rays.rows() != cb.rays.rows()) return false;
  return exact_eq(ca.rays, cb.rays) && ca.max_cones == cb.max_cones;
}

}  // namespace toricgit
