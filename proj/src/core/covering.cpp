#include "covering.hpp"

#include "gale.hpp"

namespace fanmat::cover {

FiniteAbelianGroup class_group(const IntMatrix& V) {
  if (la::rank(V) < V.rows())
    fail(Errc::rank_deficient, "class group requires a fan matrix of full row rank");
  return la::cokernel_structure(V, V.cols());
}

FiniteAbelianGroup pi1_codim1(const IntMatrix& V) {
  if (la::rank(V) < V.rows())
    fail(Errc::rank_deficient, "pi1 requires a fan matrix of full row rank");
  return la::cokernel_structure(V.transposed(), V.rows());
}

IntMatrix beta_matrix(const IntMatrix& V, const IntMatrix& W) {
  if (V.rows() != W.rows() || V.cols() != W.cols())
    fail(Errc::dimension, "beta requires matrices of equal shape");
  if (la::rank(V) < V.rows())
    fail(Errc::rank_deficient, "beta requires a left factor of full row rank");
  la::RatMatrix X = la::solve_rational(W, V);  // X*W = V
  IntMatrix B(X.rows(), X.cols());
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < X.cols(); ++j) {
      if (X(i, j).get_den() != 1)
        fail(Errc::not_integer, "beta entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") = " + X(i, j).get_str() +
                                    " is not an integer");
      B(i, j) = X(i, j).get_num();
    }
  return B;
}

std::pair<CoveringData, fans::Fan> universal_cover(const fans::Fan& f) {
  CoveringData cd;
  cd.V = f.V;
  cd.V_tilde = gale::gale_dual(gale::gale_dual(f.V));
  try {
    cd.beta = beta_matrix(f.V, cd.V_tilde);
  } catch (const Error& e) {
    fail(Errc::internal, std::string("covering beta is not integral: ") + e.what());
  }
  cd.pi1 = pi1_codim1(f.V);
  cd.degree = abs(la::det(cd.beta));
  if (cd.degree != cd.pi1.torsion_order() || cd.pi1.free_rank != 0)
    fail(Errc::internal, "covering degree does not match the fundamental group order");
  fans::Fan cover{cd.V_tilde, f.max_cones};
  if (is_complete(f) != is_complete(cover))
    fail(Errc::internal, "completeness not preserved by the covering");
  return {std::move(cd), std::move(cover)};
}

Int covering_degree(const CoveringData& c) { return c.degree; }

}  // namespace fanmat::cover
