// fanmat command line front end; all functionality comes through the C API
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fanmat/fanmat.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

// RAII wrappers for API strings and handles
struct CStr {
  char* p = nullptr;
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  ~CStr() { fm_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
  char* release() {
    char* q = p;
    p = nullptr;
    return q;
  }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
  Handle& operator=(Handle&& o) noexcept {
    if (this != &o) {
      if (p) Free(p);
      p = o.p;
      o.p = nullptr;
    }
    return *this;
  }
  ~Handle() {
    if (p) Free(p);
  }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Matrix = Handle<fm_matrix, fm_matrix_free>;
using Hnf = Handle<fm_hnf, fm_hnf_free>;
using Snf = Handle<fm_snf, fm_snf_free>;
using Group = Handle<fm_group, fm_group_free>;
using Report = Handle<fm_report, fm_report_free>;
using FanH = Handle<fm_fan, fm_fan_free>;
using Ideal = Handle<fm_ideal, fm_ideal_free>;
using ConeH = Handle<fm_cone, fm_cone_free>;
using Covering = Handle<fm_covering, fm_covering_free>;
using Pres = Handle<fm_presentation, fm_presentation_free>;
using Poly = Handle<fm_poly, fm_poly_free>;
using Homog = Handle<fm_homogeneity, fm_homogeneity_free>;
using Verify = Handle<fm_verify, fm_verify_free>;

void check(fm_status s, CStr& e) {
  if (s == FM_OK) return;
  std::string msg = e.p ? e.p : fm_status_name(s);
  throw CliError{fm_status_is_input_error(s) ? 2 : 1, msg};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot open input file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Ctx {
  bool json = false;
  std::string out_path = "-";

  void emit(const std::string& content) const {
    if (out_path == "-") {
      std::cout << content;
      if (!std::cout) throw CliError{2, "cannot write to standard output"};
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError{2, "cannot open output file: " + out_path};
    out << content;
    if (!out) throw CliError{2, "cannot write output file: " + out_path};
  }
};

Matrix parse_matrix_file(const std::string& path) {
  Matrix m;
  CStr e;
  check(fm_matrix_parse(read_input(path).c_str(), m.out(), e.out()), e);
  return m;
}

FanH parse_fan_file(const std::string& path) {
  FanH f;
  CStr e;
  check(fm_fan_parse(read_input(path).c_str(), f.out(), e.out()), e);
  return f;
}

Ideal parse_ideal_file(const std::string& path) {
  Ideal i;
  CStr e;
  check(fm_ideal_parse(read_input(path).c_str(), i.out(), e.out()), e);
  return i;
}

Pres parse_pres_file(const std::string& path) {
  Pres p;
  CStr e;
  check(fm_presentation_parse(read_input(path).c_str(), p.out(), e.out()), e);
  return p;
}

// scalar documents are assembled here; everything structured comes from the API
std::string scalar_doc(const std::string& key, const std::string& raw_value) {
  return "{\n  \"" + key + "\": " + raw_value + "\n}\n";
}

std::string json_quote(const std::string& s) { return "\"" + s + "\""; }

void run_hnf(const Ctx& ctx, const std::string& path) {
  Matrix m = parse_matrix_file(path);
  Hnf h;
  CStr e, s;
  check(fm_hnf_compute(m.get(), h.out(), e.out()), e);
  check(ctx.json ? fm_hnf_to_json(h.get(), s.out(), e.out())
                 : fm_hnf_to_text(h.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_snf(const Ctx& ctx, const std::string& path) {
  Matrix m = parse_matrix_file(path);
  Snf r;
  CStr e, s;
  check(fm_snf_compute(m.get(), r.out(), e.out()), e);
  check(ctx.json ? fm_snf_to_json(r.get(), s.out(), e.out())
                 : fm_snf_to_text(r.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_gale(const Ctx& ctx, const std::string& path) {
  Matrix m = parse_matrix_file(path);
  Matrix g;
  CStr e, s;
  check(fm_gale_dual(m.get(), g.out(), e.out()), e);
  check(ctx.json ? fm_matrix_to_json(g.get(), s.out(), e.out())
                 : fm_matrix_to_text(g.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_classify(const Ctx& ctx, const std::string& path, const std::string& kind) {
  Matrix m = parse_matrix_file(path);
  Report r;
  CStr e, s;
  check(kind == "weight" ? fm_classify_weight_matrix(m.get(), r.out(), e.out())
                         : fm_classify_fan_matrix(m.get(), r.out(), e.out()),
        e);
  check(ctx.json ? fm_report_to_json(r.get(), s.out(), e.out())
                 : fm_report_to_text(r.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_validate_fan(const Ctx& ctx, const std::string& path) {
  FanH f = parse_fan_file(path);
  CStr e, s;
  check(ctx.json ? fm_fan_to_json(f.get(), s.out(), e.out())
                 : fm_fan_to_text(f.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_complete(const Ctx& ctx, const std::string& path) {
  FanH f = parse_fan_file(path);
  int complete = 0;
  CStr e;
  check(fm_fan_is_complete(f.get(), &complete, e.out()), e);
  const char* value = complete ? "true" : "false";
  ctx.emit(ctx.json ? scalar_doc("complete", value) : std::string(value) + "\n");
}

void run_irr(const Ctx& ctx, const std::string& path) {
  FanH f = parse_fan_file(path);
  Ideal i;
  CStr e, s;
  check(fm_fan_irrelevant_ideal(f.get(), i.out(), e.out()), e);
  check(ctx.json ? fm_ideal_to_json(i.get(), s.out(), e.out())
                 : fm_ideal_to_text(i.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_fan_from_irr(const Ctx& ctx, const std::string& vpath, const std::string& ipath) {
  Matrix v = parse_matrix_file(vpath);
  Ideal i = parse_ideal_file(ipath);
  FanH f;
  CStr e, s;
  check(fm_fan_from_irrelevant(v.get(), i.get(), f.out(), e.out()), e);
  check(ctx.json ? fm_fan_to_json(f.get(), s.out(), e.out())
                 : fm_fan_to_text(f.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_codim(const Ctx& ctx, const std::string& path) {
  Ideal i = parse_ideal_file(path);
  long long codim = 0;
  CStr e;
  check(fm_ideal_codim(i.get(), &codim, e.out()), e);
  std::string value = std::to_string(codim);
  ctx.emit(ctx.json ? scalar_doc("codim", json_quote(value)) : value + "\n");
}

void run_neighborly(const Ctx& ctx, const std::string& path, std::size_t k, bool dual,
                    const std::string& qpath) {
  FanH f = parse_fan_file(path);
  int res = 0;
  CStr e;
  if (dual) {
    Matrix q;
    if (!qpath.empty()) q = parse_matrix_file(qpath);
    check(fm_fan_neighborly_dual(f.get(), q.get(), k, &res, e.out()), e);
  } else {
    check(fm_fan_neighborly_primal(f.get(), k, &res, e.out()), e);
  }
  const char* value = res ? "true" : "false";
  if (ctx.json) {
    std::string doc = "{\n  \"k\": " + json_quote(std::to_string(k)) + ",\n  \"mode\": " +
                      json_quote(dual ? "dual" : "primal") + ",\n  \"neighborly\": " + value + "\n}\n";
    ctx.emit(doc);
  } else {
    ctx.emit(std::string(value) + "\n");
  }
}

void run_nef(const Ctx& ctx, const std::string& path, const std::string& qpath) {
  FanH f = parse_fan_file(path);
  Matrix q;
  if (!qpath.empty()) q = parse_matrix_file(qpath);
  ConeH c;
  CStr e, s;
  check(fm_nef_cone(f.get(), q.get(), c.out(), e.out()), e);
  check(ctx.json ? fm_cone_to_json(c.get(), s.out(), e.out())
                 : fm_cone_to_text(c.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_group(const Ctx& ctx, const std::string& path, bool pi1) {
  Matrix m = parse_matrix_file(path);
  Group g;
  CStr e, s;
  check(pi1 ? fm_pi1_codim1(m.get(), g.out(), e.out()) : fm_class_group(m.get(), g.out(), e.out()),
        e);
  if (ctx.json) {
    check(fm_group_to_json(g.get(), s.out(), e.out()), e);
    ctx.emit(s.str());
  } else {
    check(fm_group_descriptor(g.get(), s.out(), e.out()), e);
    ctx.emit(s.str() + "\n");
  }
}

void run_cover(const Ctx& ctx, const std::string& path) {
  FanH f = parse_fan_file(path);
  Covering c;
  CStr e, s;
  check(fm_universal_cover(f.get(), c.out(), e.out()), e);
  check(ctx.json ? fm_covering_to_json(c.get(), s.out(), e.out())
                 : fm_covering_to_text(c.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_beta(const Ctx& ctx, const std::string& vpath, const std::string& wpath) {
  Matrix v = parse_matrix_file(vpath);
  Matrix w = parse_matrix_file(wpath);
  Matrix b;
  CStr e, s;
  check(fm_beta_matrix(v.get(), w.get(), b.out(), e.out()), e);
  check(ctx.json ? fm_matrix_to_json(b.get(), s.out(), e.out())
                 : fm_matrix_to_text(b.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

void run_degree(const Ctx& ctx, const std::string& path) {
  FanH f = parse_fan_file(path);
  Covering c;
  CStr e, s;
  check(fm_universal_cover(f.get(), c.out(), e.out()), e);
  check(fm_covering_degree(c.get(), s.out(), e.out()), e);
  ctx.emit(ctx.json ? scalar_doc("degree", json_quote(s.str())) : s.str() + "\n");
}

void run_grade(const Ctx& ctx, const std::string& ppath, const std::string& mpath) {
  Pres p = parse_pres_file(ppath);
  Poly mono;
  CStr e;
  check(fm_poly_parse(read_input(mpath).c_str(), fm_presentation_num_vars(p.get()), mono.out(),
                      e.out()),
        e);
  CStr s;
  check(ctx.json ? fm_monomial_degree(p.get(), mono.get(), nullptr, s.out(), e.out())
                 : fm_monomial_degree(p.get(), mono.get(), s.out(), nullptr, e.out()),
        e);
  ctx.emit(ctx.json ? s.str() : s.str() + "\n");
}

int run_homogeneous(const Ctx& ctx, const std::string& ppath, const std::string& polypath) {
  Pres p = parse_pres_file(ppath);
  Homog h;
  CStr e, s;
  if (polypath.empty()) {
    check(fm_check_relations(p.get(), h.out(), e.out()), e);
  } else {
    Poly poly;
    check(fm_poly_parse(read_input(polypath).c_str(), fm_presentation_num_vars(p.get()),
                        poly.out(), e.out()),
          e);
    check(fm_check_poly(p.get(), poly.get(), h.out(), e.out()), e);
  }
  check(ctx.json ? fm_homogeneity_to_json(h.get(), s.out(), e.out())
                 : fm_homogeneity_to_text(h.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
  return fm_homogeneity_all(h.get()) ? 0 : 1;
}

void run_cover_grading(const Ctx& ctx, const std::string& path) {
  Pres p = parse_pres_file(path);
  Pres q;
  CStr e, s;
  check(fm_cover_grading(p.get(), q.out(), e.out()), e);
  check(ctx.json ? fm_presentation_to_json(q.get(), s.out(), e.out())
                 : fm_presentation_to_text(q.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
}

int run_verify(const Ctx& ctx) {
  Verify v;
  CStr e, s;
  check(fm_verify_example(v.out(), e.out()), e);
  check(ctx.json ? fm_verify_to_json(v.get(), s.out(), e.out())
                 : fm_verify_to_text(v.get(), s.out(), e.out()),
        e);
  ctx.emit(s.str());
  return fm_verify_all_pass(v.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact fan-matrix calculus for toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  app.add_flag("--json", ctx.json, "emit a JSON document instead of text");
  app.add_option("-o,--output", ctx.out_path, "write output to FILE instead of stdout");
  app.set_version_flag("--version", std::string(fm_version()));

  int rc = 0;

  std::string in1, in2, kind = "fan";
  std::size_t k_arg = 0;
  bool dual = false;

  auto* c_hnf = app.add_subcommand("hnf", "row Hermite normal form H = U*A");
  c_hnf->add_option("matrix", in1, "matrix file or -")->required();
  c_hnf->callback([&] { run_hnf(ctx, in1); });

  auto* c_snf = app.add_subcommand("snf", "Smith normal form S = U*A*W");
  c_snf->add_option("matrix", in1, "matrix file or -")->required();
  c_snf->callback([&] { run_snf(ctx, in1); });

  auto* c_gale = app.add_subcommand("gale", "canonical Gale dual of a full-row-rank matrix");
  c_gale->add_option("matrix", in1, "matrix file or -")->required();
  c_gale->callback([&] { run_gale(ctx, in1); });

  auto* c_classify = app.add_subcommand("classify", "test the F/CF or W matrix axioms");
  c_classify->add_option("matrix", in1, "matrix file or -")->required();
  c_classify->add_option("--kind", kind, "fan (default) or weight")
      ->check(CLI::IsMember({"fan", "weight"}));
  c_classify->callback([&] { run_classify(ctx, in1, kind); });

  auto* c_validate = app.add_subcommand("validate-fan", "validate a fan and print it canonically");
  c_validate->add_option("fan", in1, "fan file or -")->required();
  c_validate->callback([&] { run_validate_fan(ctx, in1); });

  auto* c_complete = app.add_subcommand("complete", "test completeness of a fan");
  c_complete->add_option("fan", in1, "fan file or -")->required();
  c_complete->callback([&] { run_complete(ctx, in1); });

  auto* c_irr = app.add_subcommand("irr", "irrelevant ideal of a fan");
  c_irr->add_option("fan", in1, "fan file or -")->required();
  c_irr->callback([&] { run_irr(ctx, in1); });

  auto* c_ffi = app.add_subcommand("fan-from-irr", "rebuild a fan from matrix and irrelevant ideal");
  c_ffi->add_option("matrix", in1, "fan matrix file or -")->required();
  c_ffi->add_option("ideal", in2, "ideal file or -")->required();
  c_ffi->callback([&] { run_fan_from_irr(ctx, in1, in2); });

  auto* c_codim = app.add_subcommand("codim", "codimension of the vanishing locus of an ideal");
  c_codim->add_option("ideal", in1, "ideal file or -")->required();
  c_codim->callback([&] { run_codim(ctx, in1); });

  auto* c_nb = app.add_subcommand("neighborly", "test k-neighborliness of a fan");
  c_nb->add_option("fan", in1, "fan file or -")->required();
  c_nb->add_option("k", k_arg, "number of rays that must always span a cone")->required();
  auto* dual_flag = c_nb->add_flag("--dual", dual, "use the weight-side test");
  c_nb->add_option("--weights", in2, "weight matrix file (default: Gale dual of the fan matrix)")
      ->needs(dual_flag);
  c_nb->callback([&] { run_neighborly(ctx, in1, k_arg, dual, in2); });

  auto* c_nef = app.add_subcommand("nef", "Nef cone of a complete simplicial fan");
  c_nef->add_option("fan", in1, "fan file or -")->required();
  c_nef->add_option("weights", in2, "weight matrix file (default: Gale dual of the fan matrix)");
  c_nef->callback([&] { run_nef(ctx, in1, in2); });

  auto* c_cl = app.add_subcommand("classgroup", "class group Z^m / row lattice");
  c_cl->add_option("matrix", in1, "fan matrix file or -")->required();
  c_cl->callback([&] { run_group(ctx, in1, false); });

  auto* c_pi1 = app.add_subcommand("pi1", "fundamental group in codimension 1");
  c_pi1->add_option("matrix", in1, "fan matrix file or -")->required();
  c_pi1->callback([&] { run_group(ctx, in1, true); });

  auto* c_cover = app.add_subcommand("cover", "universal 1-covering of a fan");
  c_cover->add_option("fan", in1, "fan file or -")->required();
  c_cover->callback([&] { run_cover(ctx, in1); });

  auto* c_beta = app.add_subcommand("beta", "integer beta with V = beta * W");
  c_beta->add_option("V", in1, "matrix file or -")->required();
  c_beta->add_option("W", in2, "matrix file or -")->required();
  c_beta->callback([&] { run_beta(ctx, in1, in2); });

  auto* c_degree = app.add_subcommand("degree", "degree of the universal 1-covering");
  c_degree->add_option("fan", in1, "fan file or -")->required();
  c_degree->callback([&] { run_degree(ctx, in1); });

  auto* c_grade = app.add_subcommand("grade", "multidegree of a monomial under a presentation");
  c_grade->add_option("presentation", in1, "presentation file or -")->required();
  c_grade->add_option("monomial", in2, "file holding one monomial")->required();
  c_grade->callback([&] { run_grade(ctx, in1, in2); });

  auto* c_hom = app.add_subcommand("homogeneous", "homogeneity of relations or a polynomial");
  c_hom->add_option("presentation", in1, "presentation file or -")->required();
  c_hom->add_option("polynomial", in2, "polynomial file (default: check the relations)");
  c_hom->callback([&] { rc = run_homogeneous(ctx, in1, in2); });

  auto* c_cg = app.add_subcommand("cover-grading", "free part of a grading, relations rechecked");
  c_cg->add_option("presentation", in1, "presentation file or -")->required();
  c_cg->callback([&] { run_cover_grading(ctx, in1); });

  auto* c_verify = app.add_subcommand("verify-example", "run the bundled database-entry regression");
  c_verify->callback([&] { rc = run_verify(ctx); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return rc;
}
