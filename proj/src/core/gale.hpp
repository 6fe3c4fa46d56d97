#pragma once
#include <string>
#include <vector>

#include "linalg.hpp"

namespace fanmat::gale {

using la::IntMatrix;

// rows = HNF-canonical basis of the saturated kernel {x : M*x = 0}
IntMatrix gale_dual(const IntMatrix& M);

struct FailedCondition {
  std::string label;     // "(a)" ... "(f)", "reduced"
  std::string evidence;  // human-readable witness
};

struct MatrixClassReport {
  enum class Kind { fan, weight } kind = Kind::fan;
  bool is_f = false;        // fan kind
  bool is_cf = false;       // fan kind
  bool is_w = false;        // weight kind
  bool is_reduced = false;  // both kinds
  std::vector<FailedCondition> failed;
};

// F-matrix axioms (a)-(d), CF adds (e), reduced = all column contents 1
MatrixClassReport classify_fan_matrix(const IntMatrix& V);

// W-matrix axioms (a)-(f), reduced = gale_dual(Q) is a reduced F-matrix
MatrixClassReport classify_weight_matrix(const IntMatrix& Q);

// reduced CF-matrix, i.e. V presents a poly weighted space
bool is_pws_fan_matrix(const IntMatrix& V);

}  // namespace fanmat::gale
