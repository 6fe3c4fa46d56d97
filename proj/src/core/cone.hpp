#pragma once
#include "linalg.hpp"

namespace fanmat::cones {

using la::IntMatrix;

// canonical representation of a rational polyhedral cone:
//   C = cone(rays) + span(lineality) = {x : equations*x = 0, facets*x >= 0}
// rays: primitive, zeroed at the lineality pivot columns, lex-sorted
// lineality: HNF-canonical saturated basis of the lineality space
// facets: primitive irredundant normals, zeroed at the equation pivot columns, lex-sorted
// equations: HNF-canonical saturated basis of span(C)^perp
// two cones are equal as sets iff the representations compare equal
struct RationalCone {
  std::size_t ambient = 0;
  IntMatrix rays;
  IntMatrix lineality;
  IntMatrix facets;
  IntMatrix equations;
  bool operator==(const RationalCone&) const = default;
  bool is_full_space() const { return lineality.rows() == ambient; }
  bool is_origin() const { return equations.rows() == ambient; }
};

// cone generated by the rows of gens
RationalCone dd_from_generators(const IntMatrix& gens, std::size_t ambient);

// {x : ineqs*x >= 0, eqs*x = 0}
RationalCone dd_from_hrep(const IntMatrix& ineqs, const IntMatrix& eqs, std::size_t ambient);

bool contains(const RationalCone& c, const std::vector<Rat>& x);
bool contains(const RationalCone& c, const std::vector<Int>& x);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

// rays plus +/- lineality rows: a generating set of the cone
IntMatrix generator_rows(const RationalCone& c);

}  // namespace fanmat::cones
