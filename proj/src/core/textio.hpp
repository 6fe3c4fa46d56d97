#pragma once
#include <string>
#include <vector>

#include "cone.hpp"
#include "covering.hpp"
#include "fan.hpp"
#include "gale.hpp"
#include "grading.hpp"
#include "linalg.hpp"

namespace fanmat::io {

using la::IntMatrix;

// matrix format: '#' comments and blank lines ignored; "ROWS COLS" header,
// then ROWS lines of COLS base-10 integers
IntMatrix parse_matrix(const std::string& text);
std::string matrix_to_text(const IntMatrix& m);

// fan format: matrix block, a "CONES" line, one line of 1-based ray indices
// per maximal cone; parsed cones come back 0-based and unvalidated
struct ParsedFan {
  IntMatrix V;
  std::vector<std::vector<int>> max_cones;
};
ParsedFan parse_fan(const std::string& text);
std::string fan_to_text(const fans::Fan& f);

// ideal format: "VARS m" line, then one line of 1-based indices per
// generator support; a line holding the single token 0 is the empty support
fans::SquarefreeMonomialIdeal parse_ideal(const std::string& text);
std::string ideal_to_text(const fans::SquarefreeMonomialIdeal& ideal);

// cone serialization: GENERATORS block (rays, then +/- lineality) and
// FACETS block (facets, then +/- equations), both in the matrix format
std::string cone_to_text(const cones::RationalCone& c);

// presentation format: "Q" line + matrix block, optional "TORSION" block
// (moduli line, then one row per modulus), "RELATIONS" + one polynomial per line
grading::GradedPresentation parse_presentation(const std::string& text);
std::string presentation_to_text(const grading::GradedPresentation& p);

// poly := term (('+'|'-') term)*; term := [integer '*']? factor ('*' factor)*;
// factor := 'x' index ['^' exponent]; an optional sign may lead a term
grading::Polynomial parse_polynomial(const std::string& text, std::size_t m);
std::string polynomial_to_text(const grading::Polynomial& p);

std::string multidegree_to_text(const grading::MultiDegree& d);

std::string report_to_text(const gale::MatrixClassReport& r);

std::string covering_to_text(const cover::CoveringData& c);

// homogeneity report over one polynomial or a presentation's relations
struct HomogeneityReport {
  struct Entry {
    std::string label;  // "polynomial" or "relation k"
    grading::Polynomial poly;
    grading::HomogeneityDecision dec;
    grading::MultiDegree conflict_degree;  // degree of term conflict_b on failure
  };
  std::vector<Entry> entries;
  bool all_homogeneous = true;
};
HomogeneityReport check_poly(const grading::GradedPresentation& p, const grading::Polynomial& poly);
HomogeneityReport check_relations(const grading::GradedPresentation& p);
std::string homogeneity_to_text(const HomogeneityReport& r);

}  // namespace fanmat::io
