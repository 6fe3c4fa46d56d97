#pragma once
#include "fan.hpp"
#include "linalg.hpp"

namespace fanmat::cover {

using la::FiniteAbelianGroup;
using la::IntMatrix;

// the universal 1-covering of the toric variety of a fan:
// V_tilde = gale_dual(gale_dual(V)) in HNF-canonical row form, V = beta * V_tilde,
// pi1 the codimension-1 etale fundamental group, degree = |det beta| = |pi1|
struct CoveringData {
  IntMatrix V;
  IntMatrix V_tilde;
  IntMatrix beta;
  FiniteAbelianGroup pi1;
  Int degree;
};

// Z^m / L_r(V); pre: V full row rank
FiniteAbelianGroup class_group(const IntMatrix& V);

// Z^n / L_c(V); pre: V full row rank
FiniteAbelianGroup pi1_codim1(const IntMatrix& V);

// the unique rational beta with V = beta * W, required integral;
// pre: V, W same shape, full row rank
IntMatrix beta_matrix(const IntMatrix& V, const IntMatrix& W);

// covering fan reuses the index sets of f verbatim
std::pair<CoveringData, fans::Fan> universal_cover(const fans::Fan& f);

Int covering_degree(const CoveringData& c);

}  // namespace fanmat::cover
