#include "cone.hpp"

#include <algorithm>
#include <cassert>

namespace fanmat::cones {

namespace {

using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

// double description state: extreme rays modulo an explicit lineality basis
struct RawCone {
  std::vector<Vec> lin;
  std::vector<Vec> rays;
};

// intersect R^d with the halfspaces a*x >= 0, a over normals, in order
RawCone dd_halfspaces(std::size_t d, const std::vector<Vec>& normals) {
  RawCone c;
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0);
    e[i] = 1;
    c.lin.push_back(std::move(e));
  }
  std::vector<Vec> done;  // constraints already cut with, for tightness tests

  for (const Vec& a : normals) {
    if (is_zero_vec(a)) continue;
    int l0i = -1;
    for (std::size_t i = 0; i < c.lin.size(); ++i)
      if (dot(c.lin[i], a) != 0) {
        l0i = int(i);
        break;
      }
    if (l0i >= 0) {
      // pivot: one lineality direction becomes a ray, the rest move into a*x = 0
      Vec l0 = c.lin[l0i];
      Int d0 = dot(l0, a);
      if (d0 < 0) {
        for (Int& x : l0) x = -x;
        d0 = -d0;
      }
      std::vector<Vec> nl;
      for (std::size_t i = 0; i < c.lin.size(); ++i) {
        if (int(i) == l0i) continue;
        Vec l(d);
        Int di = dot(c.lin[i], a);
        for (std::size_t k = 0; k < d; ++k) l[k] = d0 * c.lin[i][k] - di * l0[k];
        primitivize(l);
        nl.push_back(std::move(l));
      }
      for (Vec& r : c.rays) {
        Int dr = dot(r, a);
        if (dr != 0) {
          for (std::size_t k = 0; k < d; ++k) r[k] = d0 * r[k] - dr * l0[k];
          primitivize(r);
        }
      }
      c.lin = std::move(nl);
      c.rays.push_back(std::move(l0));
    } else {
      std::vector<std::size_t> P, Z, N;
      std::vector<Int> dots(c.rays.size());
      for (std::size_t i = 0; i < c.rays.size(); ++i) {
        dots[i] = dot(c.rays[i], a);
        (dots[i] > 0 ? P : dots[i] < 0 ? N : Z).push_back(i);
      }
      if (!N.empty()) {
        std::vector<Vec> nr;
        for (std::size_t i : P) nr.push_back(c.rays[i]);
        for (std::size_t i : Z) nr.push_back(c.rays[i]);
        if (!P.empty()) {
          // tight sets over the constraints processed so far
          std::vector<std::vector<std::size_t>> tight(c.rays.size());
          for (std::size_t i = 0; i < c.rays.size(); ++i)
            for (std::size_t k = 0; k < done.size(); ++k)
              if (dot(c.rays[i], done[k]) == 0) tight[i].push_back(k);
          auto subset = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
            return std::includes(y.begin(), y.end(), x.begin(), x.end());
          };
          for (std::size_t p : P)
            for (std::size_t n : N) {
              std::vector<std::size_t> T;
              std::set_intersection(tight[p].begin(), tight[p].end(), tight[n].begin(),
                                    tight[n].end(), std::back_inserter(T));
              bool adjacent = true;
              for (std::size_t q = 0; q < c.rays.size() && adjacent; ++q)
                if (q != p && q != n && subset(T, tight[q])) adjacent = false;
              if (!adjacent) continue;
              Vec w(d);
              for (std::size_t k = 0; k < d; ++k)
                w[k] = dots[p] * c.rays[n][k] - dots[n] * c.rays[p][k];
              primitivize(w);
              nr.push_back(std::move(w));
            }
        }
        c.rays = std::move(nr);
      }
    }
    done.push_back(a);
  }
  return c;
}

std::vector<Vec> matrix_rows(const IntMatrix& m) {
  std::vector<Vec> v;
  v.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.row(i));
  return v;
}

// canonical coset representative of v modulo the subspace spanned by the
// HNF-canonical basis B: zero at the pivot columns, primitive, direction kept
Vec reduce_mod_subspace(const IntMatrix& B, const Vec& v) {
  std::vector<Rat> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = Rat(v[j]);
  for (std::size_t i = 0; i < B.rows(); ++i) {
    std::size_t p = 0;
    while (B(i, p) == 0) ++p;
    Rat coef = w[p] / Rat(B(i, p));
    if (coef != 0)
      for (std::size_t j = p; j < v.size(); ++j) w[j] -= coef * Rat(B(i, j));
  }
  Int den = 1;
  for (const Rat& x : w) den = lcm(den, x.get_den());
  Vec out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = Int(w[j].get_num() * (den / w[j].get_den()));
  primitivize(out);
  return out;
}

IntMatrix canonical_ray_matrix(std::size_t d, const std::vector<Vec>& raw, const IntMatrix& mod) {
  std::vector<Vec> rs;
  for (const Vec& r : raw) {
    Vec c = reduce_mod_subspace(mod, r);
    if (!is_zero_vec(c)) rs.push_back(std::move(c));
  }
  std::sort(rs.begin(), rs.end(), [](const Vec& x, const Vec& y) { return la::compare_vec(x, y) < 0; });
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return la::from_rows(d, rs);
}

IntMatrix lineality_matrix(std::size_t d, const std::vector<Vec>& lin) {
  return la::saturate_rows(la::from_rows(d, lin));
}

IntMatrix generator_rows_impl(const IntMatrix& rays, const IntMatrix& lineality, std::size_t d) {
  IntMatrix g(rays.rows() + 2 * lineality.rows(), d);
  std::size_t r = 0;
  for (std::size_t i = 0; i < rays.rows(); ++i, ++r)
    for (std::size_t j = 0; j < d; ++j) g(r, j) = rays(i, j);
  for (std::size_t i = 0; i < lineality.rows(); ++i, ++r)
    for (std::size_t j = 0; j < d; ++j) g(r, j) = lineality(i, j);
  for (std::size_t i = 0; i < lineality.rows(); ++i, ++r)
    for (std::size_t j = 0; j < d; ++j) g(r, j) = -lineality(i, j);
  return g;
}

std::vector<Vec> hrep_normals(const IntMatrix& ineqs, const IntMatrix& eqs) {
  std::vector<Vec> normals;
  for (std::size_t i = 0; i < eqs.rows(); ++i) {
    Vec r = eqs.row(i);
    normals.push_back(r);
    for (Int& x : r) x = -x;
    normals.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < ineqs.rows(); ++i) normals.push_back(ineqs.row(i));
  return normals;
}

}  // namespace

RationalCone dd_from_generators(const IntMatrix& gens, std::size_t ambient) {
  if (gens.cols() != ambient && gens.rows() > 0)
    fail(Errc::dimension, "generator length does not match ambient dimension");
  RationalCone c;
  c.ambient = ambient;
  IntMatrix g = gens.rows() > 0 ? gens : IntMatrix(0, ambient);
  c.equations = la::kernel_saturated(g);
  RawCone dual = dd_halfspaces(ambient, matrix_rows(g));
  c.facets = canonical_ray_matrix(ambient, dual.rays, c.equations);
  RawCone primal = dd_halfspaces(ambient, hrep_normals(c.facets, c.equations));
  c.lineality = lineality_matrix(ambient, primal.lin);
  c.rays = canonical_ray_matrix(ambient, primal.rays, c.lineality);
  return c;
}

RationalCone dd_from_hrep(const IntMatrix& ineqs, const IntMatrix& eqs, std::size_t ambient) {
  RationalCone c;
  c.ambient = ambient;
  RawCone primal = dd_halfspaces(ambient, hrep_normals(ineqs, eqs));
  c.lineality = lineality_matrix(ambient, primal.lin);
  c.rays = canonical_ray_matrix(ambient, primal.rays, c.lineality);
  IntMatrix g = generator_rows_impl(c.rays, c.lineality, ambient);
  c.equations = la::kernel_saturated(g);
  RawCone dual = dd_halfspaces(ambient, matrix_rows(g));
  c.facets = canonical_ray_matrix(ambient, dual.rays, c.equations);
  return c;
}

IntMatrix generator_rows(const RationalCone& c) {
  return generator_rows_impl(c.rays, c.lineality, c.ambient);
}

bool contains(const RationalCone& c, const std::vector<Rat>& x) {
  if (x.size() != c.ambient) fail(Errc::dimension, "point length does not match ambient dimension");
  auto rdot = [&](const IntMatrix& m, std::size_t i) {
    Rat s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += Rat(m(i, j)) * x[j];
    return s;
  };
  for (std::size_t i = 0; i < c.equations.rows(); ++i)
    if (rdot(c.equations, i) != 0) return false;
  for (std::size_t i = 0; i < c.facets.rows(); ++i)
    if (rdot(c.facets, i) < 0) return false;
  return true;
}

bool contains(const RationalCone& c, const std::vector<Int>& x) {
  std::vector<Rat> q(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
  return contains(c, q);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient != b.ambient) fail(Errc::dimension, "cone ambient dimensions differ");
  return dd_from_hrep(IntMatrix::vstack(a.facets, b.facets),
                      IntMatrix::vstack(a.equations, b.equations), a.ambient);
}

}  // namespace fanmat::cones
