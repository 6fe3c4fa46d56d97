#pragma once
#include <string>
#include <vector>

#include "matrix.hpp"

namespace fanmat::la {

// H = U*A, U unimodular; H row-style Hermite normal form:
// pivots positive, entries above each pivot reduced into [0, pivot),
// pivot columns strictly increasing, zero rows at the bottom.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};

// S = U*A*W, U and W unimodular, S diagonal with d1 | d2 | ... | dk >= 0.
// Winv is W^-1, kept so callers can read off saturations.
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix W;
  IntMatrix Winv;
  std::size_t rank = 0;
  std::vector<Int> factors() const {  // diagonal entries, nonzero prefix
    std::vector<Int> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(S(i, i));
    return f;
  }
};

struct FiniteAbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;  // each >= 2, d1 | d2 | ...
  bool operator==(const FiniteAbelianGroup&) const = default;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  Int torsion_order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
  }
  // "Z^r x Z/d1 x ... x Z/dk"
  std::string descriptor() const;
};

HnfResult hnf(const IntMatrix& A);
SnfResult snf(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);

// exact determinant of a square matrix (Bareiss)
Int det(const IntMatrix& A);

// the nonzero rows of hnf(A).H: canonical basis of the row lattice
IntMatrix hnf_canonical_rows(const IntMatrix& A);

// Z^ambient / L_r(A); pre: cols(A) == ambient
FiniteAbelianGroup cokernel_structure(const IntMatrix& A, std::size_t ambient);

// rows form the HNF-canonical basis of {x in Z^cols : A*x = 0}
IntMatrix kernel_saturated(const IntMatrix& A);

// rows form the HNF-canonical basis of Sat(L_r(A)) = (L_r(A) ⊗ Q) ∩ Z^cols
IntMatrix saturate_rows(const IntMatrix& A);

// unique rational X with X*A = B; pre: A full row rank
RatMatrix solve_rational(const IntMatrix& A, const IntMatrix& B);

// membership v ∈ L_r(A) given H = hnf_canonical_rows(A)
bool in_row_lattice(const IntMatrix& H, const std::vector<Int>& v);

}  // namespace fanmat::la
