#pragma once

// Randomized property suites, shared between the doctest runner and the
// acceptance gate. Each suite returns true when every case passed and logs
// the first few failures to stderr.

#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "toricgit/json_io.hpp"

namespace toricgit::props {

using Rng = std::mt19937;

struct Tally {
  int failures = 0;
  void require(bool ok, const char* what) {
    if (!ok) {
      if (failures < 5) std::cerr << "  property failure: " << what << "\n";
      ++failures;
    }
  }
};

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline MatZ random_matz(Rng& rng, Eigen::Index rows, Eigen::Index cols, int lo, int hi) {
  MatZ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

inline bool satisfies(const FacetSystem& F, const VecQ& x) {
  for (Eigen::Index r = 0; r < F.eq.rows(); ++r) {
    Rat dot = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) dot += Rat(F.eq(r, j)) * x(j);
    if (dot != 0) return false;
  }
  for (Eigen::Index r = 0; r < F.ineq.rows(); ++r) {
    Rat dot = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) dot += Rat(F.ineq(r, j)) * x(j);
    if (dot < 0) return false;
  }
  return true;
}

// Facet and generator descriptions of random cones agree with each other
// and with an independent Caratheodory membership oracle.
inline bool dd_consistency(int trials) {
  Rng rng(20240818);
  Tally T;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::Index n = uniform(rng, 1, 4);
    const Eigen::Index k = uniform(rng, 1, 5);
    MatZ R = random_matz(rng, n, k, -3, 3);
    GeneratorSystem G1{MatZ(n, 0), R};

    FacetSystem F = facets(G1);
    GeneratorSystem G2 = cone_from_halfspaces(F);
    T.require(cone_equals(G1, G2), "double description round-trip");

    for (int probe = 0; probe < 3; ++probe) {
      VecQ x(n);
      if (probe == 0) {
        for (Eigen::Index i = 0; i < n; ++i) x(i) = 0;
        for (Eigen::Index j = 0; j < k; ++j) {
          Rat c(uniform(rng, 0, 3), uniform(rng, 1, 2));
          for (Eigen::Index i = 0; i < n; ++i) x(i) += c * Rat(R(i, j));
        }
      } else {
        for (Eigen::Index i = 0; i < n; ++i)
          x(i) = Rat(uniform(rng, -6, 6), uniform(rng, 1, 3));
      }
      const bool lib = in_cone(R, x);
      T.require(lib == oracles::caratheodory_in_cone(R, x), "membership vs oracle");
      T.require(lib == satisfies(F, x), "membership vs facets");
      if (probe == 0) T.require(lib, "combination must be a member");
    }
  }
  return T.failures == 0;
}

// Integer kernels have the right rank, annihilate the matrix, and contain
// every small integer kernel vector (saturation).
inline bool kernel_saturation(int trials) {
  Rng rng(20240819);
  Tally T;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::Index m = uniform(rng, 1, 3);
    const Eigen::Index n = uniform(rng, 2, 4);
    MatZ M = random_matz(rng, m, n, -4, 4);
    MatZ K = integer_kernel(M);

    MatQ Mq(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < n; ++j) Mq(i, j) = Rat(M(i, j));
    T.require(K.rows() == n - rank(Mq), "kernel rank");

    for (Eigen::Index r = 0; r < K.rows(); ++r) {
      VecZ v = K.row(r).transpose();
      T.require(exact_zero(MatZ(M * v)), "kernel rows annihilate");
    }

    VecZ u = VecZ::Zero(n);
    std::vector<int> digits(static_cast<size_t>(n), -2);
    while (true) {
      for (Eigen::Index i = 0; i < n; ++i) u(i) = digits[static_cast<size_t>(i)];
      if (exact_zero(MatZ(M * u)))
        T.require(lattice_contains(K, u), "saturation: small kernel vector in lattice");
      Eigen::Index pos = 0;
      while (pos < n && digits[static_cast<size_t>(pos)] == 2) {
        digits[static_cast<size_t>(pos)] = -2;
        ++pos;
      }
      if (pos == n) break;
      ++digits[static_cast<size_t>(pos)];
    }
  }
  return T.failures == 0;
}

// Semistability of an orbit class under a character matches a literal
// bounded search for an invariant monomial. Instance sizes keep the Cramer
// bound under 12, so the bounded search is complete.
inline bool semistable_oracle(int trials) {
  Rng rng(20240820);
  Tally T;
  for (int trial = 0; trial < trials; ++trial) {
    const Eigen::Index r = uniform(rng, 1, 2);
    const Eigen::Index N = uniform(rng, 2, 4);
    TorusAction A;
    A.rank = r;
    A.weights = random_matz(rng, r, N, -2, 2);
    for (Eigen::Index j = 0; j < N; ++j) A.coords.push_back("c" + std::to_string(j + 1));

    OrbitClass O;
    for (Eigen::Index j = 0; j < N; ++j)
      if (uniform(rng, 0, 1)) O.support.push_back(j);
    if (O.support.empty()) O.support.push_back(uniform(rng, 0, static_cast<int>(N) - 1));

    VecZ chi(r);
    for (Eigen::Index i = 0; i < r; ++i) chi(i) = uniform(rng, -2, 2);

    const bool lib = orbit_semistable(A, O, chi);
    const bool oracle = oracles::monomial_search(support_columns(A, O), chi, 12);
    T.require(lib == oracle, "semistability vs monomial search");
  }
  return T.failures == 0;
}

// The normal form depends only on the ideal: scaling, cross-adding
// polynomial multiples, and reordering the generators never change it.
inline bool normal_form_uniqueness(int trials) {
  Rng rng(20240821);
  Tally T;
  auto random_pure_x = [&](int t, int d) {
    TruncPoly p = trunc_poly(t, d);
    const int terms = uniform(rng, 0, 3);
    for (int added = 0; added < terms; ++added) {
      Monomial m(static_cast<size_t>(t), 0);
      int degree = uniform(rng, 2, d - 1);
      for (int step = 0; step < degree; ++step)
        m[static_cast<size_t>(uniform(rng, 0, t - 1))] += 1;
      add_term(p, m, Rat(uniform(rng, -2, 2), uniform(rng, 1, 2)));
    }
    return p;
  };
  auto random_mixed = [&](int s, int t, int d, bool allow_const) {
    TruncPoly p = trunc_poly(s + t, d);
    const int terms = uniform(rng, 0, 2);
    for (int added = 0; added < terms; ++added) {
      Monomial m(static_cast<size_t>(s + t), 0);
      int degree = uniform(rng, allow_const ? 0 : 1, d - 1);
      for (int step = 0; step < degree; ++step)
        m[static_cast<size_t>(uniform(rng, 0, s + t - 1))] += 1;
      add_term(p, m, Rat(uniform(rng, -2, 2), uniform(rng, 1, 2)));
    }
    return p;
  };

  for (int trial = 0; trial < trials; ++trial) {
    const int s = uniform(rng, 1, 3);
    const int t = uniform(rng, 1, 3);
    const int d = uniform(rng, 3, 4);

    std::vector<TruncPoly> clean;
    for (int i = 0; i < s; ++i) {
      TruncPoly u = trunc_poly(s + t, d);
      Monomial yi(static_cast<size_t>(s + t), 0);
      yi[static_cast<size_t>(i)] = 1;
      add_term(u, yi, Rat(1));
      TruncPoly h = random_pure_x(t, d);
      for (const auto& [m, c] : h.terms) {
        Monomial lifted(static_cast<size_t>(s + t), 0);
        for (int j = 0; j < t; ++j) lifted[static_cast<size_t>(s + j)] = m[static_cast<size_t>(j)];
        add_term(u, lifted, c);
      }
      clean.push_back(u);
    }
    NormalForm reference = normalize(clean, d);

    std::vector<TruncPoly> messy = clean;
    for (int i = 0; i < s; ++i) {
      int c = uniform(rng, -3, 3);
      if (c == 0) c = 2;
      messy[static_cast<size_t>(i)] =
          scale(messy[static_cast<size_t>(i)], Rat(c, uniform(rng, 1, 2)));
    }
    for (int round = 0; round < 2; ++round)
      for (int i = 0; i < s; ++i) {
        if (s < 2) break;
        int j = uniform(rng, 0, s - 1);
        if (j == i) j = (j + 1) % s;
        TruncPoly q = random_mixed(s, t, d, true);
        messy[static_cast<size_t>(i)] =
            add(messy[static_cast<size_t>(i)], mul(q, messy[static_cast<size_t>(j)]));
      }
    std::shuffle(messy.begin(), messy.end(), rng);

    T.require(normalize(messy, d) == reference, "normal form unchanged by regeneration");
  }
  return T.failures == 0;
}

// Existence of a strictly convex support function agrees with existence of
// an ample character of the quotient presentation, across unimodular twists
// and relabelings of the corpus fans.
inline bool corpus_agreement(int light_trials, int heavy_trials) {
  Rng rng(20240822);
  Tally T;

  struct Entry {
    Fan fan;
    bool projective;
  };
  std::vector<Entry> corpus;
  {
    Fan p1;
    p1.rank = 1;
    p1.rays = matz({{1, -1}});
    p1.max_cones = {{0}, {1}};
    corpus.push_back({p1, true});
  }
  corpus.push_back({builtin_fan("P2"), true});
  {
    Fan p3;
    p3.rank = 3;
    p3.rays = matz({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
    p3.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    corpus.push_back({p3, true});
  }
  corpus.push_back({builtin_fan("P1xP1"), true});
  corpus.push_back({builtin_fan("F1"), true});
  corpus.push_back({fan_of_cox(builtin_cox("example31")), false});

  auto random_unimodular = [&](Eigen::Index n) {
    MatZ U = MatZ::Identity(n, n);
    for (int op = 0; op < 6; ++op) {
      const Eigen::Index i = uniform(rng, 0, static_cast<int>(n) - 1);
      Eigen::Index j = uniform(rng, 0, static_cast<int>(n) - 1);
      switch (uniform(rng, 0, 2)) {
        case 0:
          if (j == i) j = (j + 1) % n;
          if (n > 1) U.row(i) += Int(uniform(rng, -2, 2)) * U.row(j);
          break;
        case 1:
          U.row(i) = -U.row(i);
          break;
        default:
          U.row(i).swap(U.row(j));
      }
    }
    return U;
  };

  auto twisted = [&](const Fan& F) {
    Fan G;
    G.rank = F.rank;
    G.rays = random_unimodular(F.rank) * F.rays;
    std::vector<Eigen::Index> perm(static_cast<size_t>(F.rays.cols()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MatZ rays(F.rank, F.rays.cols());
    for (Eigen::Index j = 0; j < F.rays.cols(); ++j)
      rays.col(perm[static_cast<size_t>(j)]) = G.rays.col(j);
    G.rays = rays;
    for (const auto& cone : F.max_cones) {
      std::vector<Eigen::Index> mapped;
      for (Eigen::Index idx : cone) mapped.push_back(perm[static_cast<size_t>(idx)]);
      std::sort(mapped.begin(), mapped.end());
      G.max_cones.push_back(mapped);
    }
    std::shuffle(G.max_cones.begin(), G.max_cones.end(), rng);
    return G;
  };

  auto check_one = [&](const Entry& entry) {
    Fan F = twisted(entry.fan);
    T.require(validate_fan(F).ok(), "twisted fan valid");
    T.require(is_smooth(F), "twisted fan smooth");
    T.require(is_complete(F), "twisted fan complete");
    const bool has_sf = projective_support_function(F).has_value();
    T.require(has_sf == entry.projective, "projectivity invariant under twists");
    const bool has_chi = git_ample_character(cox_of_fan(F)).has_value();
    T.require(has_sf == has_chi, "support function iff ample character");
  };

  // The five projective fans carry the bulk of the volume; the
  // nonprojective one is heavier per case and gets a smaller share.
  for (int trial = 0; trial < light_trials; ++trial)
    check_one(corpus[static_cast<size_t>(trial % 5)]);
  for (int trial = 0; trial < heavy_trials; ++trial) check_one(corpus[5]);
  return T.failures == 0;
}

}  // namespace toricgit::props
