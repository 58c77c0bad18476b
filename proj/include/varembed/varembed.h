/* varembed: exact polynomial Pell solutions, divisibility-certified
 * polynomial families, Diophantine-to-variety compilation, embedding
 * witnesses, and symbolic verification.
 *
 * Conventions: every constructor-like call writes its result through an
 * `out` pointer and returns VE_OK on success.  On failure the out pointer is
 * left untouched and ve_last_error() describes the problem for the calling
 * thread.  Strings returned through `char**` are heap-allocated; release
 * them with ve_string_free().  Handles are released with the matching
 * *_free(); passing NULL to a *_free is a no-op.
 */
#ifndef VAREMBED_H
#define VAREMBED_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ve_status {
  VE_OK = 0,
  VE_ERR_CONTEXT_MISMATCH,
  VE_ERR_DIVISION_BY_ZERO,
  VE_ERR_NOT_DIVISIBLE,
  VE_ERR_INCOMPLETE_POINT,
  VE_ERR_UNKNOWN_VARIABLE,
  VE_ERR_PARSE,
  VE_ERR_INVALID_PELL_PAIR,
  VE_ERR_NOT_PELL_CANONICAL,
  VE_ERR_DEGENERATE_CONSTANTS,
  VE_ERR_SIZE_LIMIT,
  VE_ERR_DIMENSION_TOO_SMALL,
  VE_ERR_NOT_A_SOLUTION,
  VE_ERR_ZERO_COMPONENT,
  VE_ERR_NONCONSTANT_TJ,
  VE_ERR_INCOMPLETE_WITNESS,
  VE_ERR_INVALID_ARGUMENT,
  VE_ERR_INTERNAL,
  VE_ERR_OOM
} ve_status;

typedef struct ve_poly ve_poly;       /* polynomial + its variable context */
typedef struct ve_divfam ve_divfam;   /* H_1..H_n family with P_n */
typedef struct ve_variety ve_variety; /* affine variety presentation */
typedef struct ve_witness ve_witness; /* polynomial curve through a variety */
typedef struct ve_report ve_report;   /* verification report */

/* Message for the most recent failing call on this thread; never NULL. */
const char* ve_last_error(void);
void ve_string_free(char* s);

/* ---- polynomials -------------------------------------------------- */
/* Parses `text` over the given variables; with nvars = 0 the variables are
 * inferred from their first appearance, left to right. */
ve_status ve_poly_parse(const char* text, const char* const* vars,
                        size_t nvars, ve_poly** out);
/* Canonical text form (descending graded-lex term order). */
ve_status ve_poly_format(const ve_poly* p, char** out);
void ve_poly_free(ve_poly* p);

/* ---- Pell solutions over polynomial rings ------------------------- */
/* X^2 - (T^2 - 1) Y^2 = 1: the n-th power (X_n, Y_n) of the fundamental
 * solution (T, 1); n may be negative. */
ve_status ve_pell_solution(const ve_poly* t, int64_t n, ve_poly** x_out,
                           ve_poly** y_out);
/* Z_n = (Y_n - n) / (T - 1); requires nonconstant T. */
ve_status ve_pell_z(const ve_poly* t, int64_t n, ve_poly** z_out);

/* ---- divisibility-certified families ------------------------------ */
/* Constants are rational literals like "3", "-1/2"; they must be pairwise
 * distinct.  Builds with more than 3 constants are refused unless
 * allow_large is nonzero (sizes grow doubly exponentially). */
ve_status ve_divfam_build(const char* const* constants, size_t n,
                          int allow_large, ve_divfam** out);
/* Specialization C_k = 3k. */
ve_status ve_divfam_build_3k(size_t n, int allow_large, ve_divfam** out);
ve_status ve_divfam_to_json(const ve_divfam* fam, char** out);
void ve_divfam_free(ve_divfam* fam);

/* ---- variety presentations ---------------------------------------- */
/* q is the Diophantine polynomial; its variable count fixes the dimension
 * (complex case requires at least 3 variables). */
ve_status ve_variety_build_real(const ve_poly* q, ve_variety** out);
ve_status ve_variety_build_complex(const ve_poly* q, int allow_large,
                                   ve_variety** out);
ve_status ve_variety_to_json(const ve_variety* v, char** out);
ve_status ve_variety_from_json(const char* text, ve_variety** out);
void ve_variety_free(ve_variety* v);

/* ---- embedding witnesses ------------------------------------------ */
/* Real case: `values` is the integer solution tuple (one value per variable
 * of q, all nonzero, q(values) = 0). */
ve_status ve_witness_build_real(const ve_poly* q, const int64_t* values,
                                size_t count, ve_witness** out);
/* Complex case: row-major `rows` x `cols` solutions, cols = #variables of q,
 * rows = cols - 2. */
ve_status ve_witness_build_complex(const ve_poly* q, const int64_t* values,
                                   size_t rows, size_t cols, int allow_large,
                                   ve_witness** out);
ve_status ve_witness_to_json(const ve_witness* w, char** out);
ve_status ve_witness_from_json(const char* text, ve_witness** out);
void ve_witness_free(ve_witness* w);

/* ---- verification -------------------------------------------------- */
/* Exact symbolic check that the witness lies on the variety with a full-rank
 * Jacobian; `seed` only steers the choice of (exact) sample points, never
 * the verdict's soundness. */
ve_status ve_verify(const ve_variety* v, const ve_witness* w, uint64_t seed,
                    ve_report** out);
ve_status ve_report_to_json(const ve_report* r, char** out);
int ve_report_pass(const ve_report* r); /* 1 = pass, 0 = fail */
void ve_report_free(ve_report* r);

#ifdef __cplusplus
}
#endif

#endif /* VAREMBED_H */
