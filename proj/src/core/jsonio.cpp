#include "jsonio.hpp"

#include "json.hpp"

namespace fanmat::io {
namespace {

using json = nlohmann::ordered_json;

json rows_json(const la::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const la::IntMatrix& m) {
  return json{{"rows", std::to_string(m.rows())},
              {"cols", std::to_string(m.cols())},
              {"entries", rows_json(m)}};
}

json vec_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}

json index_list_json(const std::vector<int>& v) {
  json a = json::array();
  for (int i : v) a.push_back(std::to_string(i + 1));
  return a;
}

json group_json(const la::FiniteAbelianGroup& g) {
  json factors = json::array();
  for (const Int& d : g.invariant_factors) factors.push_back(to_string(d));
  return json{{"free_rank", std::to_string(g.free_rank)},
              {"invariant_factors", std::move(factors)},
              {"descriptor", g.descriptor()}};
}

json degree_json(const grading::MultiDegree& d) {
  return json{{"free_part", vec_json(d.free_part)},
              {"residues", vec_json(d.residues)},
              {"moduli", vec_json(d.moduli)},
              {"text", multidegree_to_text(d)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string matrix_to_json(const la::IntMatrix& m) { return dump(matrix_json(m)); }

std::string hnf_to_json(const la::HnfResult& r) {
  return dump(json{{"H", matrix_json(r.H)}, {"U", matrix_json(r.U)}, {"rank", std::to_string(r.rank)}});
}

std::string snf_to_json(const la::SnfResult& r) {
  return dump(json{{"S", matrix_json(r.S)},
                   {"U", matrix_json(r.U)},
                   {"W", matrix_json(r.W)},
                   {"rank", std::to_string(r.rank)}});
}

std::string group_to_json(const la::FiniteAbelianGroup& g) { return dump(group_json(g)); }

std::string report_to_json(const gale::MatrixClassReport& r) {
  json j;
  if (r.kind == gale::MatrixClassReport::Kind::fan) {
    j["kind"] = "fan";
    j["is_f"] = r.is_f;
    j["is_cf"] = r.is_cf;
  } else {
    j["kind"] = "weight";
    j["is_w"] = r.is_w;
  }
  j["is_reduced"] = r.is_reduced;
  json failed = json::array();
  for (const auto& f : r.failed) failed.push_back(json{{"label", f.label}, {"evidence", f.evidence}});
  j["failed_conditions"] = std::move(failed);
  return dump(j);
}

std::string fan_to_json(const fans::Fan& f) {
  json cones = json::array();
  for (const auto& c : f.max_cones) cones.push_back(index_list_json(c));
  return dump(json{{"V", matrix_json(f.V)}, {"max_cones", std::move(cones)}});
}

std::string ideal_to_json(const fans::SquarefreeMonomialIdeal& ideal) {
  json supports = json::array();
  for (const auto& s : ideal.supports) supports.push_back(index_list_json(s));
  return dump(json{{"num_vars", std::to_string(ideal.num_vars)}, {"supports", std::move(supports)}});
}

std::string cone_to_json(const cones::RationalCone& c) {
  return dump(json{{"ambient", std::to_string(c.ambient)},
                   {"rays", rows_json(c.rays)},
                   {"lineality", rows_json(c.lineality)},
                   {"facets", rows_json(c.facets)},
                   {"equations", rows_json(c.equations)}});
}

std::string covering_to_json(const cover::CoveringData& c) {
  return dump(json{{"v_tilde", matrix_json(c.V_tilde)},
                   {"beta", matrix_json(c.beta)},
                   {"pi1", group_json(c.pi1)},
                   {"degree", to_string(c.degree)}});
}

std::string presentation_to_json(const grading::GradedPresentation& p) {
  json j{{"Q", matrix_json(p.Q)}};
  j["torsion"] = json{{"moduli", vec_json(p.torsion.moduli)}, {"rows", rows_json(p.torsion.rows)}};
  json rels = json::array();
  for (const auto& r : p.relations) rels.push_back(polynomial_to_text(r));
  j["relations"] = std::move(rels);
  return dump(j);
}

std::string degree_to_json(const grading::MultiDegree& d) { return dump(degree_json(d)); }

std::string homogeneity_to_json(const HomogeneityReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je{{"label", e.label}, {"polynomial", polynomial_to_text(e.poly)}};
    je["homogeneous"] = e.dec.homogeneous;
    if (e.dec.homogeneous) {
      je["degree"] = degree_json(e.dec.degree);
    } else {
      je["conflict"] = json{{"term_a", std::to_string(e.dec.conflict_a + 1)},
                            {"term_b", std::to_string(e.dec.conflict_b + 1)},
                            {"degree_a", degree_json(e.dec.degree)},
                            {"degree_b", degree_json(e.conflict_degree)}};
    }
    entries.push_back(std::move(je));
  }
  return dump(json{{"entries", std::move(entries)}, {"all_homogeneous", r.all_homogeneous}});
}

std::string verify_to_json(const ex97::VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"id", c.id}, {"description", c.description}, {"pass", c.pass}, {"detail", c.detail}});
  return dump(json{{"checks", std::move(checks)}, {"all_pass", r.all_pass}});
}

}  // namespace fanmat::io
