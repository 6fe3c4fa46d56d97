#pragma once
#include <string>

#include "example97.hpp"
#include "textio.hpp"

namespace fanmat::io {

// every numeric field is rendered as an exact decimal string; documents end
// with a newline and use two-space indentation
std::string matrix_to_json(const la::IntMatrix& m);
std::string hnf_to_json(const la::HnfResult& r);
std::string snf_to_json(const la::SnfResult& r);
std::string group_to_json(const la::FiniteAbelianGroup& g);
std::string report_to_json(const gale::MatrixClassReport& r);
std::string fan_to_json(const fans::Fan& f);
std::string ideal_to_json(const fans::SquarefreeMonomialIdeal& ideal);
std::string cone_to_json(const cones::RationalCone& c);
std::string covering_to_json(const cover::CoveringData& c);
std::string presentation_to_json(const grading::GradedPresentation& p);
std::string degree_to_json(const grading::MultiDegree& d);
std::string homogeneity_to_json(const HomogeneityReport& r);
std::string verify_to_json(const ex97::VerifyReport& r);

}  // namespace fanmat::io
