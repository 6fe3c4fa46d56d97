#include "fanmat/fanmat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "covering.hpp"
#include "error.hpp"
#include "example97.hpp"
#include "fan.hpp"
#include "gale.hpp"
#include "grading.hpp"
#include "jsonio.hpp"
#include "linalg.hpp"
#include "nef.hpp"
#include "textio.hpp"

using namespace fanmat;

struct fm_matrix {
  la::IntMatrix m;
};
struct fm_hnf {
  la::HnfResult r;
};
struct fm_snf {
  la::SnfResult r;
};
struct fm_group {
  la::FiniteAbelianGroup g;
};
struct fm_report {
  gale::MatrixClassReport r;
};
struct fm_fan {
  fans::Fan f;
};
struct fm_ideal {
  fans::SquarefreeMonomialIdeal ideal;
};
struct fm_cone {
  cones::RationalCone c;
};
struct fm_covering {
  cover::CoveringData data;
  fans::Fan fan;
};
struct fm_presentation {
  grading::GradedPresentation p;
};
struct fm_poly {
  grading::Polynomial p;
};
struct fm_homogeneity {
  io::HomogeneityReport r;
};
struct fm_verify {
  ex97::VerifyReport r;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

fm_status map_errc(Errc c) {
  switch (c) {
    case Errc::parse: return FM_ERR_PARSE;
    case Errc::dimension: return FM_ERR_DIMENSION;
    case Errc::index_out_of_range: return FM_ERR_INDEX;
    case Errc::length_mismatch: return FM_ERR_LENGTH;
    case Errc::empty_ideal: return FM_ERR_EMPTY_IDEAL;
    case Errc::empty_polynomial: return FM_ERR_EMPTY_POLYNOMIAL;
    case Errc::rank_deficient: return FM_ERR_RANK_DEFICIENT;
    case Errc::no_solution: return FM_ERR_NO_SOLUTION;
    case Errc::not_integer: return FM_ERR_NOT_INTEGER;
    case Errc::not_gale_dual: return FM_ERR_NOT_GALE_DUAL;
    case Errc::not_simplicial: return FM_ERR_NOT_SIMPLICIAL;
    case Errc::bad_intersection: return FM_ERR_BAD_INTERSECTION;
    case Errc::not_maximal: return FM_ERR_NOT_MAXIMAL;
    case Errc::not_free_homogeneous: return FM_ERR_NOT_FREE_HOMOGENEOUS;
    case Errc::check_failed: return FM_ERR_CHECK_FAILED;
    case Errc::internal: return FM_ERR_INTERNAL;
  }
  return FM_ERR_INTERNAL;
}

template <class F>
fm_status guard(char** err, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    set_err(err, e.what());
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    set_err(err, "out of memory");
    return FM_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return FM_ERR_INTERNAL;
  }
}

fm_status require(bool ok, char** err, const char* what) {
  if (ok) return FM_OK;
  set_err(err, std::string("bad argument: ") + what);
  return FM_ERR_BAD_ARGUMENT;
}

fm_status put_string(const std::string& s, char** out, char** err) {
  char* c = dup_string(s);
  if (!c) {
    set_err(err, "out of memory");
    return FM_ERR_NOMEM;
  }
  *out = c;
  return FM_OK;
}

}  // namespace

extern "C" {

int fm_status_is_input_error(fm_status s) {
  switch (s) {
    case FM_ERR_PARSE:
    case FM_ERR_DIMENSION:
    case FM_ERR_INDEX:
    case FM_ERR_LENGTH:
    case FM_ERR_EMPTY_IDEAL:
    case FM_ERR_EMPTY_POLYNOMIAL:
    case FM_ERR_BAD_ARGUMENT:
      return 1;
    default:
      return 0;
  }
}

const char* fm_status_name(fm_status s) {
  switch (s) {
    case FM_OK: return "ok";
    case FM_ERR_PARSE: return "parse error";
    case FM_ERR_DIMENSION: return "dimension mismatch";
    case FM_ERR_INDEX: return "index out of range";
    case FM_ERR_LENGTH: return "length mismatch";
    case FM_ERR_EMPTY_IDEAL: return "empty ideal";
    case FM_ERR_EMPTY_POLYNOMIAL: return "empty polynomial";
    case FM_ERR_RANK_DEFICIENT: return "rank deficient";
    case FM_ERR_NO_SOLUTION: return "no solution";
    case FM_ERR_NOT_INTEGER: return "not integer";
    case FM_ERR_NOT_GALE_DUAL: return "not a Gale dual";
    case FM_ERR_NOT_SIMPLICIAL: return "not simplicial";
    case FM_ERR_BAD_INTERSECTION: return "bad cone intersection";
    case FM_ERR_NOT_MAXIMAL: return "cone list not an antichain";
    case FM_ERR_NOT_FREE_HOMOGENEOUS: return "not homogeneous for the free grading";
    case FM_ERR_CHECK_FAILED: return "check failed";
    case FM_ERR_BAD_ARGUMENT: return "bad argument";
    case FM_ERR_NOMEM: return "out of memory";
    case FM_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* fm_version(void) { return "0.1.0"; }

void fm_string_free(char* s) { std::free(s); }

/* ---- matrices ---- */

fm_status fm_matrix_parse(const char* text, fm_matrix** out, char** err) {
  if (auto s = require(text && out, err, "text and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{io::parse_matrix(text)};
    return FM_OK;
  });
}

fm_status fm_matrix_from_int64(size_t rows, size_t cols, const long long* entries_row_major,
                               fm_matrix** out, char** err) {
  if (auto s = require(out && (entries_row_major || rows * cols == 0), err,
                       "entries and out must be non-null"))
    return s;
  return guard(err, [&] {
    la::IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        m(i, j) = Int(std::to_string(entries_row_major[i * cols + j]));
    *out = new fm_matrix{std::move(m)};
    return FM_OK;
  });
}

size_t fm_matrix_rows(const fm_matrix* m) { return m ? m->m.rows() : 0; }
size_t fm_matrix_cols(const fm_matrix* m) { return m ? m->m.cols() : 0; }

fm_status fm_matrix_entry(const fm_matrix* m, size_t i, size_t j, char** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  if (i >= m->m.rows() || j >= m->m.cols()) {
    set_err(err, "entry index out of range");
    return FM_ERR_INDEX;
  }
  return put_string(to_string(m->m(i, j)), out, err);
}

fm_status fm_matrix_to_text(const fm_matrix* m, char** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::matrix_to_text(m->m), out, err); });
}

fm_status fm_matrix_to_json(const fm_matrix* m, char** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::matrix_to_json(m->m), out, err); });
}

void fm_matrix_free(fm_matrix* m) { delete m; }

/* ---- normal forms ---- */

fm_status fm_hnf_compute(const fm_matrix* m, fm_hnf** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_hnf{la::hnf(m->m)};
    return FM_OK;
  });
}

fm_status fm_hnf_h(const fm_hnf* r, fm_matrix** out, char** err) {
  if (auto s = require(r && out, err, "hnf and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{r->r.H};
    return FM_OK;
  });
}

fm_status fm_hnf_u(const fm_hnf* r, fm_matrix** out, char** err) {
  if (auto s = require(r && out, err, "hnf and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{r->r.U};
    return FM_OK;
  });
}

size_t fm_hnf_rank(const fm_hnf* r) { return r ? r->r.rank : 0; }

fm_status fm_hnf_to_text(const fm_hnf* r, char** out, char** err) {
  if (auto s = require(r && out, err, "hnf and out must be non-null")) return s;
  return guard(err, [&] {
    std::string t = "H\n" + io::matrix_to_text(r->r.H) + "U\n" + io::matrix_to_text(r->r.U) +
                    "RANK\n" + std::to_string(r->r.rank) + "\n";
    return put_string(t, out, err);
  });
}

fm_status fm_hnf_to_json(const fm_hnf* r, char** out, char** err) {
  if (auto s = require(r && out, err, "hnf and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::hnf_to_json(r->r), out, err); });
}

void fm_hnf_free(fm_hnf* r) { delete r; }

fm_status fm_snf_compute(const fm_matrix* m, fm_snf** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_snf{la::snf(m->m)};
    return FM_OK;
  });
}

fm_status fm_snf_s(const fm_snf* r, fm_matrix** out, char** err) {
  if (auto s = require(r && out, err, "snf and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{r->r.S};
    return FM_OK;
  });
}

fm_status fm_snf_u(const fm_snf* r, fm_matrix** out, char** err) {
  if (auto s = require(r && out, err, "snf and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{r->r.U};
    return FM_OK;
  });
}

fm_status fm_snf_w(const fm_snf* r, fm_matrix** out, char** err) {
  if (auto s = require(r && out, err, "snf and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{r->r.W};
    return FM_OK;
  });
}

size_t fm_snf_rank(const fm_snf* r) { return r ? r->r.rank : 0; }

fm_status fm_snf_to_text(const fm_snf* r, char** out, char** err) {
  if (auto s = require(r && out, err, "snf and out must be non-null")) return s;
  return guard(err, [&] {
    std::string t = "S\n" + io::matrix_to_text(r->r.S) + "U\n" + io::matrix_to_text(r->r.U) +
                    "W\n" + io::matrix_to_text(r->r.W) + "RANK\n" + std::to_string(r->r.rank) + "\n";
    return put_string(t, out, err);
  });
}

fm_status fm_snf_to_json(const fm_snf* r, char** out, char** err) {
  if (auto s = require(r && out, err, "snf and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::snf_to_json(r->r), out, err); });
}

void fm_snf_free(fm_snf* r) { delete r; }

/* ---- Gale duality and classification ---- */

fm_status fm_gale_dual(const fm_matrix* m, fm_matrix** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{gale::gale_dual(m->m)};
    return FM_OK;
  });
}

fm_status fm_classify_fan_matrix(const fm_matrix* m, fm_report** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_report{gale::classify_fan_matrix(m->m)};
    return FM_OK;
  });
}

fm_status fm_classify_weight_matrix(const fm_matrix* m, fm_report** out, char** err) {
  if (auto s = require(m && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_report{gale::classify_weight_matrix(m->m)};
    return FM_OK;
  });
}

int fm_report_kind(const fm_report* r) {
  return r && r->r.kind == gale::MatrixClassReport::Kind::weight ? 1 : 0;
}
int fm_report_is_f(const fm_report* r) { return r && r->r.is_f ? 1 : 0; }
int fm_report_is_cf(const fm_report* r) { return r && r->r.is_cf ? 1 : 0; }
int fm_report_is_w(const fm_report* r) { return r && r->r.is_w ? 1 : 0; }
int fm_report_is_reduced(const fm_report* r) { return r && r->r.is_reduced ? 1 : 0; }

fm_status fm_report_to_text(const fm_report* r, char** out, char** err) {
  if (auto s = require(r && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::report_to_text(r->r), out, err); });
}

fm_status fm_report_to_json(const fm_report* r, char** out, char** err) {
  if (auto s = require(r && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::report_to_json(r->r), out, err); });
}

void fm_report_free(fm_report* r) { delete r; }

/* ---- groups ---- */

fm_status fm_class_group(const fm_matrix* v, fm_group** out, char** err) {
  if (auto s = require(v && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_group{cover::class_group(v->m)};
    return FM_OK;
  });
}

fm_status fm_pi1_codim1(const fm_matrix* v, fm_group** out, char** err) {
  if (auto s = require(v && out, err, "matrix and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_group{cover::pi1_codim1(v->m)};
    return FM_OK;
  });
}

size_t fm_group_free_rank(const fm_group* g) { return g ? g->g.free_rank : 0; }
size_t fm_group_factor_count(const fm_group* g) { return g ? g->g.invariant_factors.size() : 0; }

fm_status fm_group_factor(const fm_group* g, size_t i, char** out, char** err) {
  if (auto s = require(g && out, err, "group and out must be non-null")) return s;
  if (i >= g->g.invariant_factors.size()) {
    set_err(err, "factor index out of range");
    return FM_ERR_INDEX;
  }
  return put_string(to_string(g->g.invariant_factors[i]), out, err);
}

fm_status fm_group_descriptor(const fm_group* g, char** out, char** err) {
  if (auto s = require(g && out, err, "group and out must be non-null")) return s;
  return guard(err, [&] { return put_string(g->g.descriptor(), out, err); });
}

fm_status fm_group_to_json(const fm_group* g, char** out, char** err) {
  if (auto s = require(g && out, err, "group and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::group_to_json(g->g), out, err); });
}

void fm_group_free(fm_group* g) { delete g; }

fm_status fm_beta_matrix(const fm_matrix* v, const fm_matrix* w, fm_matrix** out, char** err) {
  if (auto s = require(v && w && out, err, "matrices and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{cover::beta_matrix(v->m, w->m)};
    return FM_OK;
  });
}

/* ---- fans ---- */

fm_status fm_fan_parse(const char* text, fm_fan** out, char** err) {
  if (auto s = require(text && out, err, "text and out must be non-null")) return s;
  return guard(err, [&] {
    io::ParsedFan pf = io::parse_fan(text);
    *out = new fm_fan{fans::validate_fan(pf.V, std::move(pf.max_cones))};
    return FM_OK;
  });
}

fm_status fm_fan_matrix(const fm_fan* f, fm_matrix** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{f->f.V};
    return FM_OK;
  });
}

size_t fm_fan_cone_count(const fm_fan* f) { return f ? f->f.max_cones.size() : 0; }

fm_status fm_fan_is_complete(const fm_fan* f, int* out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    *out = fans::is_complete(f->f) ? 1 : 0;
    return FM_OK;
  });
}

fm_status fm_fan_irrelevant_ideal(const fm_fan* f, fm_ideal** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_ideal{fans::irrelevant_ideal(f->f)};
    return FM_OK;
  });
}

fm_status fm_fan_from_irrelevant(const fm_matrix* v, const fm_ideal* ideal, fm_fan** out,
                                 char** err) {
  if (auto s = require(v && ideal && out, err, "matrix, ideal and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_fan{fans::fan_from_irrelevant(v->m, ideal->ideal)};
    return FM_OK;
  });
}

fm_status fm_fan_neighborly_primal(const fm_fan* f, size_t k, int* out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    *out = fans::k_neighborly_primal(f->f, static_cast<int>(k)) ? 1 : 0;
    return FM_OK;
  });
}

fm_status fm_fan_neighborly_dual(const fm_fan* f, const fm_matrix* q, size_t k, int* out,
                                 char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    la::IntMatrix Q = q ? q->m : gale::gale_dual(f->f.V);
    *out = cones::k_neighborly_dual(f->f, Q, static_cast<int>(k)) ? 1 : 0;
    return FM_OK;
  });
}

fm_status fm_nef_cone(const fm_fan* f, const fm_matrix* q, fm_cone** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    la::IntMatrix Q = q ? q->m : gale::gale_dual(f->f.V);
    *out = new fm_cone{cones::nef_cone(f->f, Q)};
    return FM_OK;
  });
}

fm_status fm_fan_to_text(const fm_fan* f, char** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::fan_to_text(f->f), out, err); });
}

fm_status fm_fan_to_json(const fm_fan* f, char** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::fan_to_json(f->f), out, err); });
}

void fm_fan_free(fm_fan* f) { delete f; }

/* ---- ideals ---- */

fm_status fm_ideal_parse(const char* text, fm_ideal** out, char** err) {
  if (auto s = require(text && out, err, "text and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_ideal{io::parse_ideal(text)};
    return FM_OK;
  });
}

fm_status fm_ideal_codim(const fm_ideal* ideal, long long* out, char** err) {
  if (auto s = require(ideal && out, err, "ideal and out must be non-null")) return s;
  return guard(err, [&] {
    *out = fans::irrelevant_locus_codim(ideal->ideal);
    return FM_OK;
  });
}

fm_status fm_ideal_to_text(const fm_ideal* ideal, char** out, char** err) {
  if (auto s = require(ideal && out, err, "ideal and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::ideal_to_text(ideal->ideal), out, err); });
}

fm_status fm_ideal_to_json(const fm_ideal* ideal, char** out, char** err) {
  if (auto s = require(ideal && out, err, "ideal and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::ideal_to_json(ideal->ideal), out, err); });
}

void fm_ideal_free(fm_ideal* ideal) { delete ideal; }

/* ---- cones ---- */

size_t fm_cone_ambient(const fm_cone* c) { return c ? c->c.ambient : 0; }
size_t fm_cone_ray_count(const fm_cone* c) { return c ? c->c.rays.rows() : 0; }

fm_status fm_cone_contains(const fm_cone* c, const fm_matrix* point, int* out, char** err) {
  if (auto s = require(c && point && out, err, "cone, point and out must be non-null")) return s;
  return guard(err, [&] {
    if (point->m.rows() != 1 || point->m.cols() != c->c.ambient)
      fail(Errc::dimension, "point must be a 1 x " + std::to_string(c->c.ambient) + " matrix");
    std::vector<Int> p(point->m.cols());
    for (std::size_t j = 0; j < point->m.cols(); ++j) p[j] = point->m(0, j);
    *out = cones::contains(c->c, p) ? 1 : 0;
    return FM_OK;
  });
}

fm_status fm_cone_generators(const fm_cone* c, fm_matrix** out, char** err) {
  if (auto s = require(c && out, err, "cone and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{cones::generator_rows(c->c)};
    return FM_OK;
  });
}

fm_status fm_cone_to_text(const fm_cone* c, char** out, char** err) {
  if (auto s = require(c && out, err, "cone and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::cone_to_text(c->c), out, err); });
}

fm_status fm_cone_to_json(const fm_cone* c, char** out, char** err) {
  if (auto s = require(c && out, err, "cone and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::cone_to_json(c->c), out, err); });
}

void fm_cone_free(fm_cone* c) { delete c; }

/* ---- coverings ---- */

fm_status fm_universal_cover(const fm_fan* f, fm_covering** out, char** err) {
  if (auto s = require(f && out, err, "fan and out must be non-null")) return s;
  return guard(err, [&] {
    auto [data, cfan] = cover::universal_cover(f->f);
    *out = new fm_covering{std::move(data), std::move(cfan)};
    return FM_OK;
  });
}

fm_status fm_covering_v_tilde(const fm_covering* c, fm_matrix** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{c->data.V_tilde};
    return FM_OK;
  });
}

fm_status fm_covering_beta(const fm_covering* c, fm_matrix** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_matrix{c->data.beta};
    return FM_OK;
  });
}

fm_status fm_covering_pi1(const fm_covering* c, fm_group** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_group{c->data.pi1};
    return FM_OK;
  });
}

fm_status fm_covering_degree(const fm_covering* c, char** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] { return put_string(to_string(c->data.degree), out, err); });
}

fm_status fm_covering_fan(const fm_covering* c, fm_fan** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_fan{c->fan};
    return FM_OK;
  });
}

fm_status fm_covering_to_text(const fm_covering* c, char** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::covering_to_text(c->data), out, err); });
}

fm_status fm_covering_to_json(const fm_covering* c, char** out, char** err) {
  if (auto s = require(c && out, err, "covering and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::covering_to_json(c->data), out, err); });
}

void fm_covering_free(fm_covering* c) { delete c; }

/* ---- presentations and polynomials ---- */

fm_status fm_presentation_parse(const char* text, fm_presentation** out, char** err) {
  if (auto s = require(text && out, err, "text and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_presentation{io::parse_presentation(text)};
    return FM_OK;
  });
}

size_t fm_presentation_num_vars(const fm_presentation* p) { return p ? p->p.Q.cols() : 0; }
size_t fm_presentation_relation_count(const fm_presentation* p) {
  return p ? p->p.relations.size() : 0;
}

fm_status fm_cover_grading(const fm_presentation* p, fm_presentation** out, char** err) {
  if (auto s = require(p && out, err, "presentation and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_presentation{grading::cover_grading(p->p)};
    return FM_OK;
  });
}

fm_status fm_presentation_to_text(const fm_presentation* p, char** out, char** err) {
  if (auto s = require(p && out, err, "presentation and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::presentation_to_text(p->p), out, err); });
}

fm_status fm_presentation_to_json(const fm_presentation* p, char** out, char** err) {
  if (auto s = require(p && out, err, "presentation and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::presentation_to_json(p->p), out, err); });
}

void fm_presentation_free(fm_presentation* p) { delete p; }

fm_status fm_poly_parse(const char* text, size_t num_vars, fm_poly** out, char** err) {
  if (auto s = require(text && out, err, "text and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_poly{io::parse_polynomial(text, num_vars)};
    return FM_OK;
  });
}

size_t fm_poly_term_count(const fm_poly* p) { return p ? p->p.terms.size() : 0; }

fm_status fm_poly_to_text(const fm_poly* p, char** out, char** err) {
  if (auto s = require(p && out, err, "polynomial and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::polynomial_to_text(p->p), out, err); });
}

void fm_poly_free(fm_poly* p) { delete p; }

fm_status fm_monomial_degree(const fm_presentation* p, const fm_poly* mono, char** text,
                             char** json, char** err) {
  if (auto s = require(p && mono, err, "presentation and monomial must be non-null")) return s;
  return guard(err, [&] {
    if (mono->p.terms.size() != 1)
      fail(Errc::parse, "expected a single monomial, got " + std::to_string(mono->p.terms.size()) +
                            " terms");
    grading::MultiDegree d = grading::monomial_degree(p->p, mono->p.terms[0].exponents);
    if (text)
      if (auto s = put_string(io::multidegree_to_text(d), text, err)) return s;
    if (json)
      if (auto s = put_string(io::degree_to_json(d), json, err)) return s;
    return FM_OK;
  });
}

fm_status fm_check_poly(const fm_presentation* p, const fm_poly* poly, fm_homogeneity** out,
                        char** err) {
  if (auto s = require(p && poly && out, err, "presentation, polynomial and out must be non-null"))
    return s;
  return guard(err, [&] {
    *out = new fm_homogeneity{io::check_poly(p->p, poly->p)};
    return FM_OK;
  });
}

fm_status fm_check_relations(const fm_presentation* p, fm_homogeneity** out, char** err) {
  if (auto s = require(p && out, err, "presentation and out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_homogeneity{io::check_relations(p->p)};
    return FM_OK;
  });
}

int fm_homogeneity_all(const fm_homogeneity* h) { return h && h->r.all_homogeneous ? 1 : 0; }

fm_status fm_homogeneity_to_text(const fm_homogeneity* h, char** out, char** err) {
  if (auto s = require(h && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::homogeneity_to_text(h->r), out, err); });
}

fm_status fm_homogeneity_to_json(const fm_homogeneity* h, char** out, char** err) {
  if (auto s = require(h && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::homogeneity_to_json(h->r), out, err); });
}

void fm_homogeneity_free(fm_homogeneity* h) { delete h; }

/* ---- bundled example ---- */

fm_status fm_verify_example(fm_verify** out, char** err) {
  if (auto s = require(out != nullptr, err, "out must be non-null")) return s;
  return guard(err, [&] {
    *out = new fm_verify{ex97::verify_example()};
    return FM_OK;
  });
}

int fm_verify_all_pass(const fm_verify* v) { return v && v->r.all_pass ? 1 : 0; }

fm_status fm_verify_to_text(const fm_verify* v, char** out, char** err) {
  if (auto s = require(v && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(ex97::verify_to_text(v->r), out, err); });
}

fm_status fm_verify_to_json(const fm_verify* v, char** out, char** err) {
  if (auto s = require(v && out, err, "report and out must be non-null")) return s;
  return guard(err, [&] { return put_string(io::verify_to_json(v->r), out, err); });
}

void fm_verify_free(fm_verify* v) { delete v; }

}  // extern "C"
