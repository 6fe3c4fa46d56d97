#include "example97.hpp"

#include "covering.hpp"
#include "gale.hpp"
#include "linalg.hpp"
#include "nef.hpp"
#include "textio.hpp"

namespace fanmat::ex97 {

const la::IntMatrix& weight_matrix() {
  static const la::IntMatrix Q{{2, 1, 0, 2, 0, 2, 1, 0},
                               {1, 1, 1, 1, 1, 1, 1, 1},
                               {0, 0, 0, 1, 1, 2, 2, 2}};
  return Q;
}

const la::IntMatrix& torsion_rows() {
  static const la::IntMatrix T{{0, 0, 0, 0, 1, 1, 1, 1}};
  return T;
}

const la::IntMatrix& fan_matrix() {
  static const la::IntMatrix V{{1, 0, 0, 1, -3, 0, -4, 5},
                               {0, 1, 0, 1, -3, 0, -3, 4},
                               {0, 0, 1, 1, -3, 0, -2, 3},
                               {0, 0, 0, 2, -2, 0, -4, 4},
                               {0, 0, 0, 0, 0, 1, -2, 1}};
  return V;
}

const la::IntMatrix& covering_fan_matrix() {
  static const la::IntMatrix Vt{{1, 0, 0, 0, -2, 0, -2, 3},
                                {0, 1, 0, 0, -2, 0, -1, 2},
                                {0, 0, 1, 0, -2, 0, 0, 1},
                                {0, 0, 0, 1, -1, 0, -2, 2},
                                {0, 0, 0, 0, 0, 1, -2, 1}};
  return Vt;
}

const fans::SquarefreeMonomialIdeal& irrelevant_ideal() {
  static const fans::SquarefreeMonomialIdeal ideal = [] {
    // 1-based generator supports, as listed in the database entry
    std::vector<std::vector<int>> gens = {
        {1, 3, 7}, {1, 5, 6}, {1, 5, 7}, {2, 4, 8}, {2, 5, 6}, {2, 6, 8}, {3, 4, 7},
        {3, 4, 8}, {1, 2, 7, 8}, {1, 3, 6, 8}, {1, 4, 5, 8}, {2, 3, 6, 7}, {2, 4, 5, 7},
        {3, 4, 5, 6}};
    fans::SquarefreeMonomialIdeal I;
    I.num_vars = 8;
    for (auto& g : gens) {
      for (int& i : g) --i;
      I.supports.push_back(g);
    }
    return I;
  }();
  return ideal;
}

fans::Fan fan() { return fans::fan_from_irrelevant(fan_matrix(), irrelevant_ideal()); }

grading::GradedPresentation presentation() {
  grading::GradedPresentation p;
  p.Q = weight_matrix();
  p.torsion.moduli = {2};
  p.torsion.rows = torsion_rows();
  p.relations.push_back(io::parse_polynomial("x1*x8 + x2*x7 + x3*x6 + x4*x5", 8));
  return p;
}

namespace {

void add(VerifyReport& r, const char* id, const char* description, bool pass, std::string detail) {
  r.checks.push_back({id, description, pass, std::move(detail)});
  r.all_pass = r.all_pass && pass;
}

}  // namespace

VerifyReport verify_example() {
  VerifyReport r;
  const la::IntMatrix& Q = weight_matrix();
  const la::IntMatrix& T = torsion_rows();
  const la::IntMatrix& V = fan_matrix();
  const la::IntMatrix& Vt = covering_fan_matrix();

  la::IntMatrix GV = gale::gale_dual(V);
  add(r, "(i)", "row lattice of gale_dual(V) equals row lattice of Q",
      GV == la::hnf_canonical_rows(Q), "canonical row bases compared entrywise");

  la::IntMatrix QVt = Q * V.transposed();
  la::IntMatrix QVtt = Q * Vt.transposed();
  add(r, "(ii)", "Q*V^T = 0 and Q*Vtilde^T = 0", QVt.is_zero() && QVtt.is_zero(),
      std::string("Q*V^T zero: ") + (QVt.is_zero() ? "yes" : "no") + ", Q*Vtilde^T zero: " +
          (QVtt.is_zero() ? "yes" : "no"));

  la::IntMatrix TVt = T * V.transposed();
  bool tv_even = true;
  for (std::size_t i = 0; i < TVt.rows(); ++i)
    for (std::size_t j = 0; j < TVt.cols(); ++j)
      if (mod_reduce(TVt(i, j), 2) != 0) tv_even = false;
  add(r, "(iii)", "T*V^T = 0 mod 2", tv_even, "torsion row pairs to 0 mod 2 against every column of V");

  la::FiniteAbelianGroup cl = cover::class_group(V);
  la::FiniteAbelianGroup cl_expect{3, {2}};
  add(r, "(iv)", "class group of V is Z^3 x Z/2", cl == cl_expect, "computed " + cl.descriptor());

  auto vt_report = gale::classify_fan_matrix(Vt);
  bool lattices = la::hnf_canonical_rows(gale::gale_dual(gale::gale_dual(V))) ==
                  la::hnf_canonical_rows(Vt);
  add(r, "(v)", "Vtilde is a CF-matrix with the row lattice of gale_dual(gale_dual(V))",
      vt_report.is_cf && lattices,
      std::string("CF: ") + (vt_report.is_cf ? "yes" : "no") + ", row lattices equal: " +
          (lattices ? "yes" : "no"));

  fans::Fan f = fan();
  auto [cov, cover_fan] = cover::universal_cover(f);
  (void)cover_fan;
  bool beta_ok = cov.V == cov.beta * cov.V_tilde;
  add(r, "(vi)", "universal 1-covering has integer beta and degree 2",
      beta_ok && cov.degree == 2, "degree " + to_string(cov.degree) + ", V = beta*Vtilde: " +
          (beta_ok ? "yes" : "no"));

  grading::GradedPresentation p = presentation();
  auto hom = grading::is_homogeneous(p, p.relations[0]);
  grading::MultiDegree expect{{2, 2, 2}, {1}, {2}};
  add(r, "(vii)", "quadric relation is homogeneous of degree ((2,2,2); 1 mod 2)",
      hom.homogeneous && hom.degree == expect,
      hom.homogeneous ? "degree " + io::multidegree_to_text(hom.degree) : "not homogeneous");

  long codim = fans::irrelevant_locus_codim(irrelevant_ideal());
  bool primal = fans::k_neighborly_primal(f, 2);
  bool dual = cones::k_neighborly_dual(f, Q, 2);
  add(r, "(viii)", "irrelevant locus has codimension 3 and 2-neighborliness agrees primal/dual",
      codim == 3 && primal == dual,
      "codimension " + std::to_string(codim) + ", primal " + (primal ? "true" : "false") +
          ", dual " + (dual ? "true" : "false"));

  return r;
}

std::string verify_to_text(const VerifyReport& r) {
  std::string out;
  int failed = 0;
  for (const auto& c : r.checks) {
    out += "check " + c.id + " " + c.description + ": " + (c.pass ? "PASS" : "FAIL") + "\n";
    out += "  " + c.detail + "\n";
    if (!c.pass) ++failed;
  }
  out += r.all_pass ? "all checks pass\n" : std::to_string(failed) + " check(s) failed\n";
  return out;
}

}  // namespace fanmat::ex97
