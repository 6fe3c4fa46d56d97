#include "nef.hpp"

namespace fanmat::cones {

namespace {

std::vector<int> complement(const std::vector<int>& idx, int m) {
  std::vector<int> comp;
  std::size_t k = 0;
  for (int i = 0; i < m; ++i) {
    if (k < idx.size() && idx[k] == i)
      ++k;
    else
      comp.push_back(i);
  }
  return comp;
}

void check_gale_pair(const fans::Fan& f, const IntMatrix& Q) {
  if (Q.cols() != f.m()) fail(Errc::dimension, "weight matrix column count does not match the fan");
  if (!(Q * f.V.transposed()).is_zero())
    fail(Errc::not_gale_dual, "Q*V^T is nonzero: Q is not a Gale dual of the fan matrix");
}

}  // namespace

RationalCone nef_cone(const fans::Fan& f, const IntMatrix& Q) {
  check_gale_pair(f, Q);
  const std::size_t r = Q.rows();
  IntMatrix ineqs(0, r), eqs(0, r);
  for (const auto& I : f.max_cones) {
    RationalCone c = dd_from_generators(Q.select_cols(complement(I, int(f.m()))).transposed(), r);
    ineqs = IntMatrix::vstack(ineqs, c.facets);
    eqs = IntMatrix::vstack(eqs, c.equations);
  }
  return dd_from_hrep(ineqs, eqs, r);
}

bool k_neighborly_dual(const fans::Fan& f, const IntMatrix& Q, int k) {
  const int m = int(f.m());
  if (k < 1 || k > m) fail(Errc::index_out_of_range, "k must lie in 1..m");
  RationalCone nef = nef_cone(f, Q);
  IntMatrix gens = generator_rows(nef);
  if (gens.rows() == 0) return true;  // nef cone is the origin

  std::vector<int> subset(k);
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == k) {
      RationalCone c =
          dd_from_generators(Q.select_cols(complement(subset, m)).transposed(), Q.rows());
      for (std::size_t g = 0; g < gens.rows(); ++g)
        if (!contains(c, gens.row(g))) return false;
      return true;
    }
    for (int j = start; m - j >= k - depth; ++j) {
      subset[depth] = j;
      if (!self(self, j + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0, 0);
}

}  // namespace fanmat::cones
