/* fanmat: exact fan-matrix calculus for toric varieties.
 *
 * All functions returning fm_status set *err (when err is non-NULL) to a
 * malloc'd message on failure; release it with fm_string_free. Every out
 * pointer is written only on FM_OK. Handles are released with the matching
 * *_free function; all returned strings with fm_string_free. Matrix data is
 * exchanged as decimal strings, so no entry ever truncates.
 */
#ifndef FANMAT_H
#define FANMAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
  FM_OK = 0,
  FM_ERR_PARSE = 1,
  FM_ERR_DIMENSION = 2,
  FM_ERR_INDEX = 3,
  FM_ERR_LENGTH = 4,
  FM_ERR_EMPTY_IDEAL = 5,
  FM_ERR_EMPTY_POLYNOMIAL = 6,
  FM_ERR_RANK_DEFICIENT = 7,
  FM_ERR_NO_SOLUTION = 8,
  FM_ERR_NOT_INTEGER = 9,
  FM_ERR_NOT_GALE_DUAL = 10,
  FM_ERR_NOT_SIMPLICIAL = 11,
  FM_ERR_BAD_INTERSECTION = 12,
  FM_ERR_NOT_MAXIMAL = 13,
  FM_ERR_NOT_FREE_HOMOGENEOUS = 14,
  FM_ERR_CHECK_FAILED = 15,
  FM_ERR_BAD_ARGUMENT = 16,
  FM_ERR_NOMEM = 17,
  FM_ERR_INTERNAL = 18
} fm_status;

/* 1 for malformed-input statuses (parse, dimension, index, length, empty
 * ideal/polynomial, bad argument), 0 for mathematical failures */
int fm_status_is_input_error(fm_status s);
const char* fm_status_name(fm_status s);

const char* fm_version(void);
void fm_string_free(char* s);

typedef struct fm_matrix fm_matrix;
typedef struct fm_hnf fm_hnf;
typedef struct fm_snf fm_snf;
typedef struct fm_group fm_group;
typedef struct fm_report fm_report;
typedef struct fm_fan fm_fan;
typedef struct fm_ideal fm_ideal;
typedef struct fm_cone fm_cone;
typedef struct fm_covering fm_covering;
typedef struct fm_presentation fm_presentation;
typedef struct fm_poly fm_poly;
typedef struct fm_homogeneity fm_homogeneity;
typedef struct fm_verify fm_verify;

/* ---- integer matrices ---- */
fm_status fm_matrix_parse(const char* text, fm_matrix** out, char** err);
fm_status fm_matrix_from_int64(size_t rows, size_t cols, const long long* entries_row_major,
                               fm_matrix** out, char** err);
size_t fm_matrix_rows(const fm_matrix* m);
size_t fm_matrix_cols(const fm_matrix* m);
fm_status fm_matrix_entry(const fm_matrix* m, size_t i, size_t j, char** out, char** err);
fm_status fm_matrix_to_text(const fm_matrix* m, char** out, char** err);
fm_status fm_matrix_to_json(const fm_matrix* m, char** out, char** err);
void fm_matrix_free(fm_matrix* m);

/* ---- normal forms ---- */
fm_status fm_hnf_compute(const fm_matrix* m, fm_hnf** out, char** err);
fm_status fm_hnf_h(const fm_hnf* r, fm_matrix** out, char** err);
fm_status fm_hnf_u(const fm_hnf* r, fm_matrix** out, char** err);
size_t fm_hnf_rank(const fm_hnf* r);
fm_status fm_hnf_to_text(const fm_hnf* r, char** out, char** err);
fm_status fm_hnf_to_json(const fm_hnf* r, char** out, char** err);
void fm_hnf_free(fm_hnf* r);

fm_status fm_snf_compute(const fm_matrix* m, fm_snf** out, char** err);
fm_status fm_snf_s(const fm_snf* r, fm_matrix** out, char** err);
fm_status fm_snf_u(const fm_snf* r, fm_matrix** out, char** err);
fm_status fm_snf_w(const fm_snf* r, fm_matrix** out, char** err);
size_t fm_snf_rank(const fm_snf* r);
fm_status fm_snf_to_text(const fm_snf* r, char** out, char** err);
fm_status fm_snf_to_json(const fm_snf* r, char** out, char** err);
void fm_snf_free(fm_snf* r);

/* ---- Gale duality and matrix classification ---- */
fm_status fm_gale_dual(const fm_matrix* m, fm_matrix** out, char** err);
fm_status fm_classify_fan_matrix(const fm_matrix* m, fm_report** out, char** err);
fm_status fm_classify_weight_matrix(const fm_matrix* m, fm_report** out, char** err);
/* 0: fan kind (is_f/is_cf valid), 1: weight kind (is_w valid) */
int fm_report_kind(const fm_report* r);
int fm_report_is_f(const fm_report* r);
int fm_report_is_cf(const fm_report* r);
int fm_report_is_w(const fm_report* r);
int fm_report_is_reduced(const fm_report* r);
fm_status fm_report_to_text(const fm_report* r, char** out, char** err);
fm_status fm_report_to_json(const fm_report* r, char** out, char** err);
void fm_report_free(fm_report* r);

/* ---- finite abelian groups ---- */
fm_status fm_class_group(const fm_matrix* v, fm_group** out, char** err);
fm_status fm_pi1_codim1(const fm_matrix* v, fm_group** out, char** err);
size_t fm_group_free_rank(const fm_group* g);
size_t fm_group_factor_count(const fm_group* g);
fm_status fm_group_factor(const fm_group* g, size_t i, char** out, char** err);
fm_status fm_group_descriptor(const fm_group* g, char** out, char** err);
fm_status fm_group_to_json(const fm_group* g, char** out, char** err);
void fm_group_free(fm_group* g);

/* beta with V = beta * W, required integral */
fm_status fm_beta_matrix(const fm_matrix* v, const fm_matrix* w, fm_matrix** out, char** err);

/* ---- fans ---- */
/* parses and validates; rejects non-fans */
fm_status fm_fan_parse(const char* text, fm_fan** out, char** err);
fm_status fm_fan_matrix(const fm_fan* f, fm_matrix** out, char** err);
size_t fm_fan_cone_count(const fm_fan* f);
fm_status fm_fan_is_complete(const fm_fan* f, int* out, char** err);
fm_status fm_fan_irrelevant_ideal(const fm_fan* f, fm_ideal** out, char** err);
fm_status fm_fan_from_irrelevant(const fm_matrix* v, const fm_ideal* ideal, fm_fan** out, char** err);
fm_status fm_fan_neighborly_primal(const fm_fan* f, size_t k, int* out, char** err);
/* q may be NULL: the canonical Gale dual of the fan matrix is used */
fm_status fm_fan_neighborly_dual(const fm_fan* f, const fm_matrix* q, size_t k, int* out, char** err);
fm_status fm_nef_cone(const fm_fan* f, const fm_matrix* q, fm_cone** out, char** err);
fm_status fm_fan_to_text(const fm_fan* f, char** out, char** err);
fm_status fm_fan_to_json(const fm_fan* f, char** out, char** err);
void fm_fan_free(fm_fan* f);

/* ---- squarefree monomial ideals ---- */
fm_status fm_ideal_parse(const char* text, fm_ideal** out, char** err);
fm_status fm_ideal_codim(const fm_ideal* ideal, long long* out, char** err);
fm_status fm_ideal_to_text(const fm_ideal* ideal, char** out, char** err);
fm_status fm_ideal_to_json(const fm_ideal* ideal, char** out, char** err);
void fm_ideal_free(fm_ideal* ideal);

/* ---- rational cones ---- */
size_t fm_cone_ambient(const fm_cone* c);
size_t fm_cone_ray_count(const fm_cone* c);
/* point: a 1 x ambient matrix */
fm_status fm_cone_contains(const fm_cone* c, const fm_matrix* point, int* out, char** err);
/* rays plus +/- lineality, one generator per row */
fm_status fm_cone_generators(const fm_cone* c, fm_matrix** out, char** err);
fm_status fm_cone_to_text(const fm_cone* c, char** out, char** err);
fm_status fm_cone_to_json(const fm_cone* c, char** out, char** err);
void fm_cone_free(fm_cone* c);

/* ---- universal 1-coverings ---- */
fm_status fm_universal_cover(const fm_fan* f, fm_covering** out, char** err);
fm_status fm_covering_v_tilde(const fm_covering* c, fm_matrix** out, char** err);
fm_status fm_covering_beta(const fm_covering* c, fm_matrix** out, char** err);
fm_status fm_covering_pi1(const fm_covering* c, fm_group** out, char** err);
fm_status fm_covering_degree(const fm_covering* c, char** out, char** err);
fm_status fm_covering_fan(const fm_covering* c, fm_fan** out, char** err);
fm_status fm_covering_to_text(const fm_covering* c, char** out, char** err);
fm_status fm_covering_to_json(const fm_covering* c, char** out, char** err);
void fm_covering_free(fm_covering* c);

/* ---- graded presentations and polynomials ---- */
fm_status fm_presentation_parse(const char* text, fm_presentation** out, char** err);
size_t fm_presentation_num_vars(const fm_presentation* p);
size_t fm_presentation_relation_count(const fm_presentation* p);
fm_status fm_cover_grading(const fm_presentation* p, fm_presentation** out, char** err);
fm_status fm_presentation_to_text(const fm_presentation* p, char** out, char** err);
fm_status fm_presentation_to_json(const fm_presentation* p, char** out, char** err);
void fm_presentation_free(fm_presentation* p);

fm_status fm_poly_parse(const char* text, size_t num_vars, fm_poly** out, char** err);
size_t fm_poly_term_count(const fm_poly* p);
fm_status fm_poly_to_text(const fm_poly* p, char** out, char** err);
void fm_poly_free(fm_poly* p);

/* degree of a single monomial; text and json may each be NULL */
fm_status fm_monomial_degree(const fm_presentation* p, const fm_poly* mono, char** text,
                             char** json, char** err);

fm_status fm_check_poly(const fm_presentation* p, const fm_poly* poly, fm_homogeneity** out,
                        char** err);
fm_status fm_check_relations(const fm_presentation* p, fm_homogeneity** out, char** err);
int fm_homogeneity_all(const fm_homogeneity* h);
fm_status fm_homogeneity_to_text(const fm_homogeneity* h, char** out, char** err);
fm_status fm_homogeneity_to_json(const fm_homogeneity* h, char** out, char** err);
void fm_homogeneity_free(fm_homogeneity* h);

/* ---- bundled end-to-end example ---- */
fm_status fm_verify_example(fm_verify** out, char** err);
int fm_verify_all_pass(const fm_verify* v);
fm_status fm_verify_to_text(const fm_verify* v, char** out, char** err);
fm_status fm_verify_to_json(const fm_verify* v, char** out, char** err);
void fm_verify_free(fm_verify* v);

#ifdef __cplusplus
}
#endif

#endif /* FANMAT_H */
