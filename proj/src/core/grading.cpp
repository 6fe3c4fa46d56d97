#include "grading.hpp"

#include <algorithm>

namespace fanmat::grading {

Polynomial normalized(Polynomial p) {
  std::sort(p.terms.begin(), p.terms.end(), [](const Term& a, const Term& b) {
    return la::compare_vec(a.exponents, b.exponents) > 0;
  });
  std::vector<Term> out;
  for (Term& t : p.terms) {
    if (!out.empty() && out.back().exponents == t.exponents)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  p.terms = std::move(out);
  return p;
}

MultiDegree monomial_degree(const GradedPresentation& p, const std::vector<Int>& exponents) {
  if (exponents.size() != p.Q.cols())
    fail(Errc::length_mismatch, "exponent vector length does not match the grading");
  MultiDegree d;
  d.free_part.resize(p.Q.rows());
  for (std::size_t i = 0; i < p.Q.rows(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < p.Q.cols(); ++j) s += p.Q(i, j) * exponents[j];
    d.free_part[i] = s;
  }
  d.moduli = p.torsion.moduli;
  d.residues.resize(p.torsion.moduli.size());
  for (std::size_t i = 0; i < p.torsion.moduli.size(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < p.torsion.rows.cols(); ++j) s += p.torsion.rows(i, j) * exponents[j];
    d.residues[i] = mod_reduce(s, p.torsion.moduli[i]);
  }
  return d;
}

HomogeneityDecision is_homogeneous(const GradedPresentation& p, const Polynomial& poly) {
  if (poly.terms.empty()) fail(Errc::empty_polynomial, "polynomial has no terms");
  HomogeneityDecision dec;
  dec.degree = monomial_degree(p, poly.terms[0].exponents);
  for (std::size_t t = 1; t < poly.terms.size(); ++t) {
    MultiDegree d = monomial_degree(p, poly.terms[t].exponents);
    if (!(d == dec.degree)) {
      dec.homogeneous = false;
      dec.conflict_a = 0;  // degree field keeps the first term's degree
      dec.conflict_b = t;
      return dec;
    }
  }
  dec.homogeneous = true;
  return dec;
}

GradedPresentation cover_grading(const GradedPresentation& p) {
  GradedPresentation out;
  out.Q = p.Q;
  out.relations = p.relations;
  for (std::size_t i = 0; i < out.relations.size(); ++i) {
    HomogeneityDecision dec = is_homogeneous(out, out.relations[i]);
    if (!dec.homogeneous)
      fail(Errc::not_free_homogeneous,
           "relation " + std::to_string(i + 1) + " is not homogeneous for the free grading");
  }
  return out;
}

}  // namespace fanmat::grading
