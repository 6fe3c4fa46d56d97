// shared fixtures, random generators and brute-force oracles for the tests
#pragma once
#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "covering.hpp"
#include "fan.hpp"
#include "gale.hpp"
#include "linalg.hpp"

namespace corpus {

using fanmat::Int;
using fanmat::la::IntMatrix;

// ---- named fixtures ----

inline fanmat::fans::Fan p2_fan() {
  IntMatrix V{{1, 0, -1}, {0, 1, -1}};
  return fanmat::fans::validate_fan(V, {{0, 1}, {1, 2}, {0, 2}});
}

inline fanmat::fans::Fan p1p1_fan() {
  // rays e1, e2, -e2, -e1
  IntMatrix V{{1, 0, 0, -1}, {0, 1, -1, 0}};
  return fanmat::fans::validate_fan(V, {{0, 1}, {0, 2}, {2, 3}, {1, 3}});
}

inline fanmat::fans::Fan quotient_p1p1_fan() {
  IntMatrix V{{1, 1, -1, -1}, {1, -1, 1, -1}};
  return fanmat::fans::validate_fan(V, {{0, 1}, {0, 2}, {2, 3}, {1, 3}});
}

inline fanmat::fans::Fan hirzebruch1_fan() {
  IntMatrix V{{1, 0, -1, 0}, {0, 1, 1, -1}};
  return fanmat::fans::validate_fan(V, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// ---- random integer matrices ----

inline IntMatrix random_matrix(std::mt19937_64& rng, int n, int m, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix A(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) A(i, j) = d(rng);
  return A;
}

inline IntMatrix random_full_row_rank(std::mt19937_64& rng, int n, int m, int lo, int hi) {
  for (;;) {
    IntMatrix A = random_matrix(rng, n, m, lo, hi);
    if (fanmat::la::rank(A) == static_cast<std::size_t>(n)) return A;
  }
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops) {
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2), op(0, 2);
  IntMatrix U = IntMatrix::identity(n);
  for (int t = 0; t < ops; ++t) {
    int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0:
        if (i != j) U.addmul_row(i, Int(coef(rng)), j);
        break;
      case 1:
        if (i != j) U.swap_rows(i, j);
        break;
      default:
        U.negate_row(i);
    }
  }
  return U;
}

// ---- random complete simplicial fans ----

// exact counterclockwise order starting from the positive x axis
inline bool angle_less(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
  auto half = [](const std::array<Int, 2>& v) {
    return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cross = a[0] * b[1] - a[1] * b[0];
  return cross > 0;
}

// complete simplicial 2D fan: rays sorted by angle, consecutive pairs as cones
inline fanmat::fans::Fan random_complete_fan2(std::mt19937_64& rng, int extra_rays) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::array<Int, 2>> rays = {{1, 0}, {0, 1}, {-1, -1}};
  auto direction_known = [&](const std::array<Int, 2>& v) {
    for (const auto& r : rays)
      if (r[0] * v[1] - r[1] * v[0] == 0 && r[0] * v[0] + r[1] * v[1] > 0) return true;
    return false;
  };
  while (static_cast<int>(rays.size()) < 3 + extra_rays) {
    std::array<Int, 2> v{d(rng), d(rng)};
    if (v[0] == 0 && v[1] == 0) continue;
    Int g = fanmat::gcd(abs(v[0]), abs(v[1]));
    v[0] /= g;
    v[1] /= g;
    if (!direction_known(v)) rays.push_back(v);
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  IntMatrix V(2, rays.size());
  for (std::size_t j = 0; j < rays.size(); ++j) {
    V(0, j) = rays[j][0];
    V(1, j) = rays[j][1];
  }
  std::vector<std::vector<int>> cones;
  int m = static_cast<int>(rays.size());
  for (int j = 0; j < m; ++j) cones.push_back({j, (j + 1) % m});
  return fanmat::fans::validate_fan(V, std::move(cones));
}

// stellar subdivision of a maximal cone at the primitive barycentric ray
inline fanmat::fans::Fan stellar_subdivide(const fanmat::fans::Fan& f, std::size_t cone_index) {
  const std::vector<int>& sigma = f.max_cones.at(cone_index);
  std::vector<Int> w(f.n(), 0);
  for (int j : sigma)
    for (std::size_t i = 0; i < f.n(); ++i) w[i] += f.V(i, j);
  fanmat::primitivize(w);
  IntMatrix V(f.n(), f.m() + 1);
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < f.m(); ++j) V(i, j) = f.V(i, j);
    V(i, f.m()) = w[i];
  }
  int new_ray = static_cast<int>(f.m());
  std::vector<std::vector<int>> cones;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    if (c == cone_index) continue;
    cones.push_back(f.max_cones[c]);
  }
  for (std::size_t drop = 0; drop < sigma.size(); ++drop) {
    std::vector<int> cone;
    for (std::size_t t = 0; t < sigma.size(); ++t)
      if (t != drop) cone.push_back(sigma[t]);
    cone.push_back(new_ray);
    cones.push_back(std::move(cone));
  }
  return fanmat::fans::validate_fan(V, std::move(cones));
}

inline fanmat::fans::Fan p3_fan() {
  IntMatrix V{{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}};
  return fanmat::fans::validate_fan(V, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline fanmat::fans::Fan octant_fan() {
  IntMatrix V{{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}};
  std::vector<std::vector<int>> cones;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) cones.push_back({a, b, c});
  return fanmat::fans::validate_fan(V, std::move(cones));
}

inline fanmat::fans::Fan random_complete_fan3(std::mt19937_64& rng, int subdivisions) {
  fanmat::fans::Fan f = p3_fan();
  for (int t = 0; t < subdivisions; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, f.max_cones.size() - 1);
    f = stellar_subdivide(f, pick(rng));
  }
  return f;
}

// apply a linear automorphism (or a finite quotient when A is not unimodular):
// columns of A*V re-primitivized, cone index sets unchanged
inline fanmat::fans::Fan twist_fan(const fanmat::fans::Fan& f, const IntMatrix& A) {
  IntMatrix W = A * f.V;
  for (std::size_t j = 0; j < W.cols(); ++j) {
    std::vector<Int> col(W.rows());
    for (std::size_t i = 0; i < W.rows(); ++i) col[i] = W(i, j);
    fanmat::primitivize(col);
    for (std::size_t i = 0; i < W.rows(); ++i) W(i, j) = col[i];
  }
  return fanmat::fans::validate_fan(W, f.max_cones);
}

// ---- brute-force oracles ----

// row-style HNF shape per the exactla invariants
inline bool is_hnf_shape(const IntMatrix& H) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  bool first = true;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t p = H.cols();
    for (std::size_t j = 0; j < H.cols(); ++j)
      if (H(i, j) != 0) {
        p = j;
        break;
      }
    if (p == H.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;  // nonzero row after a zero row
    if (!first && p <= last_pivot) return false;
    if (H(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
    last_pivot = p;
    first = false;
  }
  return true;
}

// every HNF-shaped matrix reachable from A by elementary row operations
// within the entry bound; the true HNF must be the only one
inline std::vector<std::array<long, 4>> bfs_hnf_2x2(const std::array<long, 4>& a, long bound) {
  std::set<std::array<long, 4>> seen;
  std::vector<std::array<long, 4>> queue{a}, found;
  seen.insert(a);
  auto shape_ok = [](const std::array<long, 4>& s) {
    IntMatrix H(2, 2);
    H(0, 0) = s[0];
    H(0, 1) = s[1];
    H(1, 0) = s[2];
    H(1, 1) = s[3];
    return is_hnf_shape(H);
  };
  for (std::size_t at = 0; at < queue.size(); ++at) {
    std::array<long, 4> s = queue[at];
    if (shape_ok(s)) found.push_back(s);
    std::vector<std::array<long, 4>> next;
    next.push_back({s[2], s[3], s[0], s[1]});                      // swap
    next.push_back({-s[0], -s[1], s[2], s[3]});                    // negate r0
    next.push_back({s[0], s[1], -s[2], -s[3]});                    // negate r1
    next.push_back({s[0] + s[2], s[1] + s[3], s[2], s[3]});        // r0 += r1
    next.push_back({s[0] - s[2], s[1] - s[3], s[2], s[3]});        // r0 -= r1
    next.push_back({s[0], s[1], s[2] + s[0], s[3] + s[1]});        // r1 += r0
    next.push_back({s[0], s[1], s[2] - s[0], s[3] - s[1]});        // r1 -= r0
    for (const auto& t : next) {
      bool in_bound = true;
      for (long v : t)
        if (v > bound || v < -bound) in_bound = false;
      if (in_bound && seen.insert(t).second) queue.push_back(t);
    }
  }
  return found;
}

// multiset of element orders of Z^k / L_r(A) by coset enumeration (<= cap)
inline std::multiset<long> coset_order_statistics(const IntMatrix& A, long cap, bool* ok) {
  *ok = false;
  fanmat::la::HnfResult h = fanmat::la::hnf(A);
  if (h.rank != A.cols()) return {};  // infinite quotient, oracle out of scope
  IntMatrix H = h.H.top_rows(h.rank);
  std::size_t k = A.cols();

  auto reduce = [&](std::vector<Int> x) {
    // pivots are on the diagonal since rank == cols
    for (std::size_t i = k; i-- > 0;) {
      Int q = fanmat::fdiv(x[i], H(i, i));
      if (q != 0)
        for (std::size_t j = 0; j < k; ++j) x[j] -= q * H(i, j);
    }
    return x;
  };

  std::set<std::vector<Int>> reps;
  std::vector<std::vector<Int>> queue{std::vector<Int>(k, 0)};
  reps.insert(queue[0]);
  for (std::size_t at = 0; at < queue.size(); ++at) {
    if (static_cast<long>(reps.size()) > cap) return {};
    std::vector<Int> x = queue[at];
    for (std::size_t i = 0; i < k; ++i) {
      for (int s : {1, -1}) {
        std::vector<Int> y = x;
        y[i] += s;
        y = reduce(y);
        if (reps.insert(y).second) queue.push_back(y);
      }
    }
  }

  std::multiset<long> orders;
  for (const auto& x : reps) {
    long t = 1;
    for (;; ++t) {
      std::vector<Int> tx(k);
      for (std::size_t i = 0; i < k; ++i) tx[i] = Int(t) * x[i];
      bool zero = true;
      for (const Int& v : reduce(tx))
        if (v != 0) zero = false;
      if (zero) break;
      if (t > cap) return {};
    }
    orders.insert(t);
  }
  *ok = true;
  return orders;
}

// multiset of element orders of Z/d1 x ... x Z/dk
inline std::multiset<long> abstract_order_statistics(const std::vector<long>& ds) {
  std::multiset<long> orders;
  std::vector<long> a(ds.size(), 0);
  for (;;) {
    long o = 1;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      long oi = ds[i] / std::gcd(ds[i], a[i] == 0 ? ds[i] : a[i]);
      o = std::lcm(o, oi == 0 ? 1 : oi);
    }
    orders.insert(o);
    std::size_t i = 0;
    for (; i < ds.size(); ++i) {
      if (++a[i] < ds[i]) break;
      a[i] = 0;
    }
    if (i == ds.size()) break;
  }
  return orders;
}

// minimum hitting set size by full subset scan (m <= 20 or so)
inline int min_hitting_set_bruteforce(int m, const std::vector<std::vector<int>>& supports) {
  for (int size = 0; size <= m; ++size) {
    // iterate subsets of fixed popcount
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      if (__builtin_popcountl(mask) != size) continue;
      bool hits_all = true;
      for (const auto& s : supports) {
        bool hit = false;
        for (int v : s)
          if (mask & (1ul << v)) hit = true;
        if (!hit) {
          hits_all = false;
          break;
        }
      }
      if (hits_all) return size;
    }
  }
  return m + 1;
}

}  // namespace corpus
