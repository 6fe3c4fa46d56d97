#pragma once
#include <string>
#include <vector>

#include "fan.hpp"
#include "grading.hpp"
#include "matrix.hpp"

namespace fanmat::ex97 {

// bundled fixture: id no. 97 in the Cox ring database (a wMDS with
// Cl = Z^3 + Z/2 whose universal 1-covering is a degree-2 MDS)
const la::IntMatrix& weight_matrix();       // Q, 3x8
const la::IntMatrix& torsion_rows();        // 1x8, modulus 2
const la::IntMatrix& fan_matrix();          // V, 5x8
const la::IntMatrix& covering_fan_matrix(); // Vtilde, 5x8
const fans::SquarefreeMonomialIdeal& irrelevant_ideal();
fans::Fan fan();  // validated fan of V with the 14 maximal cones
grading::GradedPresentation presentation();  // Q + torsion + quadric relation

struct VerifyCheck {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

VerifyReport verify_example();
std::string verify_to_text(const VerifyReport& r);

}  // namespace fanmat::ex97
