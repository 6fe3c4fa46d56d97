#include "linalg.hpp"

#include <cassert>
#include <cstdlib>

namespace fanmat::la {

std::string FiniteAbelianGroup::descriptor() const {
  std::string s = "Z^" + std::to_string(free_rank);
  for (const Int& d : invariant_factors) s += " x Z/" + d.get_str();
  return s;
}

namespace {

// unimodular 2x2 combine of rows r and i so that col j gets (gcd, 0)
void rows_to_gcd(IntMatrix& A, IntMatrix& U, std::size_t r, std::size_t i, std::size_t j) {
  Int a = A(r, j), b = A(i, j), g, s, t;
  gcdext(a, b, g, s, t);
  Int ag = exdiv(a, g), bg = exdiv(b, g);
  for (IntMatrix* M : {&A, &U}) {
    for (std::size_t k = 0; k < M->cols(); ++k) {
      Int x = (*M)(r, k), y = (*M)(i, k);
      (*M)(r, k) = s * x + t * y;
      (*M)(i, k) = ag * y - bg * x;
    }
  }
}

}  // namespace

HnfResult hnf(const IntMatrix& A) {
  HnfResult res{A, IntMatrix::identity(A.rows()), 0};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;
  std::size_t r = 0;
  for (std::size_t j = 0; j < A.cols() && r < A.rows(); ++j) {
    for (std::size_t i = r + 1; i < A.rows(); ++i)
      if (H(i, j) != 0) rows_to_gcd(H, U, r, i, j);
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.negate_row(r);
      U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(H(i, j), H(r, j));
      if (q != 0) {
        H.addmul_row(i, -q, r);
        U.addmul_row(i, -q, r);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix hnf_canonical_rows(const IntMatrix& A) {
  HnfResult h = hnf(A);
  return h.H.top_rows(h.rank);
}

std::size_t rank(const IntMatrix& A) { return hnf(A).rank; }

SnfResult snf(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SnfResult res{A, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n), 0};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& W = res.W;
  IntMatrix& Wi = res.Winv;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    W.swap_cols(a, b);
    Wi.swap_rows(a, b);
  };
  // cols: a += c*b ; inverse op on Winv rows: b -= c*a
  auto addmul_cols = [&](std::size_t a, const Int& c, std::size_t b) {
    S.addmul_col(a, c, b);
    W.addmul_col(a, c, b);
    Wi.addmul_row(b, -c, a);
  };
  // 2x2 unimodular on cols t,j of S making S(t,j)=0, S(t,t)=gcd
  auto cols_to_gcd = [&](std::size_t t, std::size_t j) {
    Int a = S(t, t), b = S(t, j), g, s, tt;
    gcdext(a, b, g, s, tt);
    Int ag = exdiv(a, g), bg = exdiv(b, g);
    // (col_t, col_j) <- (s*col_t + tt*col_j, ag*col_j - bg*col_t), det = 1
    for (std::size_t i = 0; i < m; ++i) {
      Int x = S(i, t), y = S(i, j);
      S(i, t) = s * x + tt * y;
      S(i, j) = ag * y - bg * x;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Int x = W(i, t), y = W(i, j);
      W(i, t) = s * x + tt * y;
      W(i, j) = ag * y - bg * x;
    }
    // inverse of [[s, -bg], [tt, ag]] (column action) acts on rows t,j of Winv
    for (std::size_t k = 0; k < n; ++k) {
      Int x = Wi(t, k), y = Wi(j, k);
      Wi(t, k) = ag * x + bg * y;
      Wi(j, k) = -tt * x + s * y;
    }
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero |entry| in the trailing block, row-major tie break
    std::size_t pi = 0, pj = 0;
    Int best;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        Int v = abs(S(i, j));
        if (!found || v < best) {
          pi = i;
          pj = j;
          best = v;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) {
      S.swap_rows(t, pi);
      U.swap_rows(t, pi);
    }
    if (pj != t) swap_cols(t, pj);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i)
        if (S(i, t) != 0) rows_to_gcd(S, U, t, i, t);
      bool row_dirty = false;
      for (std::size_t j = t + 1; j < n; ++j)
        if (S(t, j) != 0) {
          cols_to_gcd(t, j);
          row_dirty = true;
        }
      if (row_dirty) {
        bool col_clean = true;
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0) col_clean = false;
        if (!col_clean) continue;
      }
      // divisibility: S(t,t) must divide the whole trailing block
      Int d = abs(S(t, t));
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (S(i, j) % d != 0) {
            S.addmul_row(t, 1, i);  // S(i,t) is 0, so column t stays clean
            U.addmul_row(t, 1, i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }
  std::size_t r = 0;
  while (r < t && S(r, r) != 0) ++r;
  res.rank = r;
  return res;
}

Int det(const IntMatrix& A) {
  if (A.rows() != A.cols()) fail(Errc::dimension, "determinant of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = exdiv(M(i, j) * M(k, k) - M(i, k) * M(k, j), prev);
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : -M(n - 1, n - 1);
}

FiniteAbelianGroup cokernel_structure(const IntMatrix& A, std::size_t ambient) {
  if (A.cols() != ambient) fail(Errc::dimension, "cokernel ambient dimension mismatch");
  SnfResult s = snf(A);
  FiniteAbelianGroup g;
  g.free_rank = ambient - s.rank;
  for (const Int& d : s.factors())
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

IntMatrix kernel_saturated(const IntMatrix& A) {
  HnfResult h = hnf(A.transposed());  // H = U * A^T; trailing U rows kill A^T
  const std::size_t m = A.cols();
  IntMatrix K(m - h.rank, m);
  for (std::size_t i = h.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) K(i - h.rank, j) = h.U(i, j);
  return hnf_canonical_rows(K);
}

IntMatrix saturate_rows(const IntMatrix& A) {
  SnfResult s = snf(A);  // A = U^-1 S W^-1: first rank rows of W^-1 span Sat(L_r(A))
  return hnf_canonical_rows(s.Winv.top_rows(s.rank));
}

RatMatrix solve_rational(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols() != B.cols()) fail(Errc::dimension, "solve: A and B column counts differ");
  const std::size_t r = A.rows(), m = A.cols(), k = B.rows();
  // X*A = B  <=>  A^T * X^T = B^T; eliminate on [A^T | B^T]
  RatMatrix M(m, r + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) M(i, j) = Rat(A(j, i));
    for (std::size_t j = 0; j < k; ++j) M(i, r + j) = Rat(B(j, i));
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of(r, 0);
  for (std::size_t col = 0; col < r && row < m; ++col) {
    std::size_t p = row;
    while (p < m && M(p, col) == 0) ++p;
    if (p == m) fail(Errc::rank_deficient, "solve: coefficient matrix is not of full row rank");
    M.swap_rows(row, p);
    Rat inv = 1 / M(row, col);
    for (std::size_t j = col; j < r + k; ++j) M(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M(i, col) == 0) continue;
      Rat c = M(i, col);
      for (std::size_t j = col; j < r + k; ++j) M(i, j) -= c * M(row, j);
    }
    pivot_of[col] = row++;
  }
  if (row < r) fail(Errc::rank_deficient, "solve: coefficient matrix is not of full row rank");
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (M(i, r + j) != 0) fail(Errc::no_solution, "solve: right-hand side outside the row space");
  RatMatrix X(k, r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) X(i, j) = M(pivot_of[j], r + i);
  return X;
}

bool in_row_lattice(const IntMatrix& H, const std::vector<Int>& v) {
  std::vector<Int> w = v;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    std::size_t p = 0;
    while (p < H.cols() && H(i, p) == 0) ++p;
    assert(p < H.cols());
    if (w[p] % H(i, p) != 0) return false;
    Int c = exdiv(w[p], H(i, p));
    if (c != 0)
      for (std::size_t j = p; j < H.cols(); ++j) w[j] -= c * H(i, j);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

}  // namespace fanmat::la
