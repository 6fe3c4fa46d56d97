#pragma once
#include <vector>

#include "matrix.hpp"

namespace fanmat::la {

// decision for: does L_r(A) contain a strictly positive vector,
// i.e. is there a rational c with c*A >= 1 componentwise?
struct PositivityDecision {
  bool feasible = false;
  // feasible: witness = coefficients * A, all entries >= 1
  std::vector<Int> witness;
  std::vector<Int> coefficients;
  // infeasible: Farkas multipliers, lambda >= 0, A*lambda = 0, sum(lambda) > 0
  std::vector<Rat> refutation;
};

PositivityDecision strictly_positive_in_rowspace(const IntMatrix& A);

}  // namespace fanmat::la
