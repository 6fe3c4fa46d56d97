#pragma once
#include <vector>

#include "linalg.hpp"

namespace fanmat::fans {

using la::IntMatrix;

// simplicial fan: V holds the primitive ray generators as columns, max_cones
// the maximal cones as 0-based column index sets. Invariants (established by
// validate_fan): V full row rank; every cone simplicial; cones pairwise
// intersect in their common face; index sets form an antichain, each sorted,
// the list sorted and duplicate-free.
struct Fan {
  IntMatrix V;
  std::vector<std::vector<int>> max_cones;
  std::size_t n() const { return V.rows(); }
  std::size_t m() const { return V.cols(); }
};

// squarefree monomial ideal given by the supports of its minimal generators,
// 0-based, each sorted, antichain, list sorted
struct SquarefreeMonomialIdeal {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> supports;
};

Fan validate_fan(const IntMatrix& V, std::vector<std::vector<int>> max_cones);

// purity plus ridge pairing
bool is_complete(const Fan& f);

// generators prod_{i not in I} x_i over the maximal cones I, minimalized
SquarefreeMonomialIdeal irrelevant_ideal(const Fan& f);

Fan fan_from_irrelevant(const IntMatrix& V, const SquarefreeMonomialIdeal& ideal);

// codimension of the vanishing locus = size of a minimum hitting set of the
// supports; the unit ideal (an empty support present) gives num_vars + 1
int irrelevant_locus_codim(const SquarefreeMonomialIdeal& ideal);

// every k-element subset of the ray indices spans a cone of the fan
bool k_neighborly_primal(const Fan& f, int k);

}  // namespace fanmat::fans
