#include "gale.hpp"

#include "cone.hpp"
#include "positivity.hpp"

namespace fanmat::gale {

namespace {

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string factors_str(const std::vector<Int>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " ";
    s += f[i].get_str();
  }
  return s;
}

}  // namespace

IntMatrix gale_dual(const IntMatrix& M) {
  if (la::rank(M) < M.rows())
    fail(Errc::rank_deficient, "gale dual requires a matrix of full row rank");
  return la::kernel_saturated(M);
}

MatrixClassReport classify_fan_matrix(const IntMatrix& V) {
  const std::size_t n = V.rows(), m = V.cols();
  MatrixClassReport rep;
  rep.kind = MatrixClassReport::Kind::fan;

  bool a = la::rank(V) == n;
  if (!a) rep.failed.push_back({"(a)", "rank is " + std::to_string(la::rank(V)) +
                                           ", expected " + std::to_string(n)});

  // F-complete: the columns generate R^n as a cone
  cones::RationalCone col_cone = cones::dd_from_generators(V.transposed(), n);
  bool b = col_cone.is_full_space();
  if (!b) {
    std::string ev = "column cone is not all of R^" + std::to_string(n);
    if (col_cone.facets.rows() > 0) ev += "; valid inequality " + vec_str(col_cone.facets.row(0));
    else if (col_cone.equations.rows() > 0)
      ev += "; columns satisfy " + vec_str(col_cone.equations.row(0)) + "*x = 0";
    rep.failed.push_back({"(b)", ev});
  }

  bool c = true;
  for (std::size_t j = 0; j < m && c; ++j)
    if (V.col(j) == std::vector<Int>(n, 0)) {
      rep.failed.push_back({"(c)", "column " + std::to_string(j + 1) + " is zero"});
      c = false;
    }

  bool d = true;
  std::vector<std::vector<Int>> prim(m);
  for (std::size_t j = 0; j < m; ++j) {
    prim[j] = V.col(j);
    primitivize(prim[j]);
  }
  for (std::size_t i = 0; i < m && d; ++i)
    for (std::size_t j = i + 1; j < m && d; ++j) {
      if (prim[i] == prim[j] && !(prim[i] == std::vector<Int>(n, 0))) {
        rep.failed.push_back({"(d)", "columns " + std::to_string(i + 1) + " and " +
                                         std::to_string(j + 1) + " are positively proportional"});
        d = false;
      }
    }

  std::vector<Int> factors = la::snf(V).factors();
  bool e = factors.size() == n;
  for (const Int& f : factors)
    if (f != 1) e = false;
  if (!e)
    rep.failed.push_back({"(e)", "column lattice is not Z^" + std::to_string(n) +
                                     " (invariant factors: " + factors_str(factors) + ")"});

  bool reduced = true;
  for (std::size_t j = 0; j < m && reduced; ++j) {
    Int g = content(V.col(j));
    if (g != 1) {
      rep.failed.push_back({"reduced", "column " + std::to_string(j + 1) + " has content " + g.get_str()});
      reduced = false;
    }
  }

  rep.is_f = a && b && c && d;
  rep.is_cf = rep.is_f && e;
  rep.is_reduced = reduced;
  return rep;
}

MatrixClassReport classify_weight_matrix(const IntMatrix& Q) {
  const std::size_t r = Q.rows(), m = Q.cols();
  MatrixClassReport rep;
  rep.kind = MatrixClassReport::Kind::weight;

  bool a = la::rank(Q) == r;
  if (!a) rep.failed.push_back({"(a)", "rank is " + std::to_string(la::rank(Q)) +
                                           ", expected " + std::to_string(r)});

  std::vector<Int> factors = la::snf(Q).factors();
  bool b = factors.size() == r;
  for (const Int& f : factors)
    if (f != 1) b = false;
  if (!b)
    rep.failed.push_back({"(b)", "row lattice is not saturated (invariant factors: " +
                                     factors_str(factors) + ")"});

  la::PositivityDecision pos = la::strictly_positive_in_rowspace(Q);
  if (!pos.feasible)
    rep.failed.push_back({"(c)", "row lattice contains no strictly positive vector"});

  bool d = true;
  for (std::size_t j = 0; j < m && d; ++j)
    if (Q.col(j) == std::vector<Int>(r, 0)) {
      rep.failed.push_back({"(d)", "column " + std::to_string(j + 1) + " is zero"});
      d = false;
    }

  IntMatrix H = la::hnf_canonical_rows(Q);
  bool e = true;
  for (std::size_t j = 0; j < m && e; ++j) {
    std::vector<Int> ej(m, 0);
    ej[j] = 1;
    if (la::in_row_lattice(H, ej)) {
      rep.failed.push_back({"(e)", "row lattice contains the standard basis vector e_" +
                                       std::to_string(j + 1)});
      e = false;
    }
  }

  // (f): L_r(Q) may not contain a vector supported on two coordinates with
  // entries of opposite sign; intersect with each coordinate plane lattice
  bool f = true;
  for (std::size_t i = 0; i < m && f; ++i)
    for (std::size_t j = i + 1; j < m && f; ++j) {
      IntMatrix S(H.rows() + 2, m);
      for (std::size_t x = 0; x < H.rows(); ++x)
        for (std::size_t y = 0; y < m; ++y) S(x, y) = H(x, y);
      S(H.rows(), i) = -1;
      S(H.rows() + 1, j) = -1;
      IntMatrix K = la::kernel_saturated(S.transposed());
      // rows (c, d) with c*H = d_i*e_i + d_j*e_j; the intersection has rank K.rows()
      if (K.rows() >= 2) {
        rep.failed.push_back({"(f)", "row lattice meets the {" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + "} coordinate plane in rank 2"});
        f = false;
      } else if (K.rows() == 1) {
        Int vi = 0, vj = 0;
        for (std::size_t x = 0; x < H.rows(); ++x) {
          vi += K(0, x) * H(x, i);
          vj += K(0, x) * H(x, j);
        }
        if (vi * vj < 0) {
          std::vector<Int> w(m, 0);
          w[i] = vi;
          w[j] = vj;
          rep.failed.push_back({"(f)", "row lattice contains " + vec_str(w) +
                                           " supported on two coordinates with opposite signs"});
          f = false;
        }
      }
    }

  bool reduced = false;
  if (la::rank(Q) == r) {
    MatrixClassReport fr = classify_fan_matrix(gale_dual(Q));
    reduced = fr.is_f && fr.is_reduced;
    if (!reduced)
      rep.failed.push_back({"reduced", "gale dual is not a reduced F-matrix"});
  } else {
    rep.failed.push_back({"reduced", "gale dual undefined: matrix is rank deficient"});
  }

  rep.is_w = a && b && pos.feasible && d && e && f;
  rep.is_reduced = reduced;
  return rep;
}

bool is_pws_fan_matrix(const IntMatrix& V) {
  MatrixClassReport rep = classify_fan_matrix(V);
  return rep.is_cf && rep.is_reduced;
}

}  // namespace fanmat::gale
