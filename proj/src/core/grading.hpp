#pragma once
#include <vector>

#include "linalg.hpp"

namespace fanmat::grading {

using la::IntMatrix;

// torsion rows of a Cl(X)-grading: row j is taken modulo moduli[j] >= 2,
// entries stored reduced into [0, modulus)
struct TorsionMatrix {
  std::vector<Int> moduli;
  IntMatrix rows;  // k x m
  bool empty() const { return moduli.empty(); }
  bool operator==(const TorsionMatrix&) const = default;
};

struct Term {
  Int coeff;                  // nonzero
  std::vector<Int> exponents;  // length m, entries >= 0
  bool operator==(const Term&) const = default;
};

// terms with distinct exponent vectors, sorted lexicographically descending
struct Polynomial {
  std::size_t num_vars = 0;
  std::vector<Term> terms;
  bool operator==(const Polynomial&) const = default;
};

// free part Q (full row rank) plus optional torsion part, with the defining
// relations of the graded ring
struct GradedPresentation {
  IntMatrix Q;
  TorsionMatrix torsion;
  std::vector<Polynomial> relations;
};

struct MultiDegree {
  std::vector<Int> free_part;
  std::vector<Int> residues;  // reduced mod the matching moduli
  std::vector<Int> moduli;
  bool operator==(const MultiDegree&) const = default;
};

// sort, merge equal exponent vectors, drop zero terms
Polynomial normalized(Polynomial p);

MultiDegree monomial_degree(const GradedPresentation& p, const std::vector<Int>& exponents);

struct HomogeneityDecision {
  bool homogeneous = false;
  MultiDegree degree;                     // common degree when homogeneous
  std::size_t conflict_a = 0, conflict_b = 0;  // term indices of the first conflict
};

HomogeneityDecision is_homogeneous(const GradedPresentation& p, const Polynomial& poly);

// drop the torsion part; every relation must stay homogeneous for the free part
GradedPresentation cover_grading(const GradedPresentation& p);

}  // namespace fanmat::grading
