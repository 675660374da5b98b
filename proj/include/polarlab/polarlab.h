/* polarlab: convex bodies containing the origin, polar duality, truncation
 * metrics, the geometric-mean contraction and order-reversing involutions,
 * behind a C interface with opaque handles.
 *
 * Conventions
 *   - Every function that can fail returns plab_status; PLAB_OK is 0.
 *   - Out-parameters are written only on PLAB_OK.
 *   - Handles are created by this library and released with the matching
 *     _free function; strings returned through char** are released with
 *     plab_string_free.
 *   - A human-readable message for the last failing call on a context is
 *     available via plab_context_last_error.
 *   - Unbounded support/radial samples are IEEE +infinity.
 */
#ifndef POLARLAB_H
#define POLARLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PLAB_API __declspec(dllexport)
#else
#define PLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plab_status {
  PLAB_OK = 0,
  PLAB_ERR_NULL_ARGUMENT = 1,
  PLAB_ERR_PARSE = 2,
  PLAB_ERR_INVALID_BODY = 3,
  PLAB_ERR_NON_POSITIVE_SCALE = 4,
  PLAB_ERR_SINGULAR_MAP = 5,
  PLAB_ERR_NOT_INTERIOR = 6,
  PLAB_ERR_NOT_INTERIOR_BODY = 7,
  PLAB_ERR_BAD_EPSILON = 8,
  PLAB_ERR_BAD_PARAMETER = 9,
  PLAB_ERR_BAD_INDEX = 10,
  PLAB_ERR_NOT_POSITIVE_DEFINITE = 11,
  PLAB_ERR_POSITIVE_DEFINITE = 12,
  PLAB_ERR_GRID_MISMATCH = 13,
  PLAB_ERR_NO_CONVERGENCE = 14,
  PLAB_ERR_INTERNAL = 15
} plab_status;

typedef struct plab_context plab_context;
typedef struct plab_body plab_body;

/* ---- context ---------------------------------------------------------- */

/* dimension >= 2; grid_n = 0 picks the default resolution (1440 directions
 * in the plane). The seed drives every randomized corpus member. */
PLAB_API plab_context* plab_context_new(int dimension, int grid_n, uint64_t seed);
PLAB_API void plab_context_free(plab_context* ctx);
PLAB_API const char* plab_context_last_error(const plab_context* ctx);

/* Absolute grid-tolerance override; pass <= 0 to restore the scale-based
 * default model. */
PLAB_API void plab_context_set_tolerance(plab_context* ctx, double tau_grid);
PLAB_API int plab_context_grid_size(const plab_context* ctx);
PLAB_API double plab_context_tolerance_for(const plab_context* ctx, const plab_body* body);

PLAB_API const char* plab_version(void);
PLAB_API void plab_string_free(char* text);

/* ---- bodies ----------------------------------------------------------- */

/* Parse the JSON body grammar (ball/polytope/halfspaces/cone_j/segment/
 * origin/space/scale/image). */
PLAB_API plab_status plab_body_parse(plab_context* ctx, const char* json, plab_body** out);
PLAB_API plab_status plab_body_ball(plab_context* ctx, double r, plab_body** out);
PLAB_API void plab_body_free(plab_body* body);

PLAB_API plab_status plab_body_to_json(const plab_body* body, char** out);
PLAB_API int plab_body_size(const plab_body* body);
PLAB_API plab_status plab_body_support(const plab_body* body, double* out, size_t len);
PLAB_API plab_status plab_body_radial(const plab_body* body, double* out, size_t len);
PLAB_API double plab_body_nu(const plab_body* body);

PLAB_API plab_status plab_polar(const plab_body* body, plab_body** out);
PLAB_API plab_status plab_minkowski_sum(const plab_body* a, const plab_body* b, plab_body** out);
PLAB_API plab_status plab_intersect(const plab_body* a, const plab_body* b, plab_body** out);
PLAB_API plab_status plab_hull_union(const plab_body* a, const plab_body* b, plab_body** out);
PLAB_API plab_status plab_scale(const plab_body* body, double r, plab_body** out);
PLAB_API plab_status plab_truncate(const plab_body* body, double r, plab_body** out);
/* matrix is row-major n*n in the context dimension. */
PLAB_API plab_status plab_linear_image(plab_context* ctx, const double* matrix,
                                       const plab_body* body, plab_body** out);

/* ---- metrics ---------------------------------------------------------- */

PLAB_API double plab_hausdorff(const plab_body* a, const plab_body* b);
PLAB_API double plab_hausdorff_truncated(const plab_body* a, const plab_body* b, double radius);
PLAB_API double plab_attouch_wets(const plab_body* a, const plab_body* b);
/* JSON {"d_h":..., "d_aw":..., "sweep":[{"j":..., "term":...}]}; eps > 0
 * additionally reports the threshold equivalence at eps. */
PLAB_API plab_status plab_metrics_report(plab_context* ctx, const plab_body* a,
                                         const plab_body* b, double eps, char** json_out);

/* ---- geometric mean and contraction ----------------------------------- */

/* trace_csv_out (optional) receives "m,gap" lines. */
PLAB_API plab_status plab_geometric_mean(plab_context* ctx, const plab_body* a,
                                         const plab_body* b, double tol, int max_iter,
                                         plab_body** final_out, char** trace_csv_out);

PLAB_API plab_status plab_psi(const plab_body* body, double t, plab_body** out);
PLAB_API plab_status plab_kappa(const plab_body* body, double t, plab_body** out);
PLAB_API plab_status plab_phi(plab_context* ctx, const plab_body* body, double t, double tol,
                              plab_body** out);

/* csv_out receives "t,d_aw,equiv" rows over the given parameters;
 * bodies_json_out (optional) maps each t to the contracted body. */
PLAB_API plab_status plab_contract_report(plab_context* ctx, const plab_body* body,
                                          const double* t_values, size_t count, double tol,
                                          char** csv_out, char** bodies_json_out);

/* ---- dualities --------------------------------------------------------- */

PLAB_API plab_status plab_dual_map(plab_context* ctx, const double* matrix,
                                   const plab_body* body, plab_body** out);

/* JSON array with one entry per t: {"t":..., "body":..., "residual_polar_W":...,
 * "residual_fixed":..., "tolerance":..., "certified":...}. */
PLAB_API plab_status plab_fixpoints_report(plab_context* ctx, const double* matrix,
                                           const double* t_values, size_t count, double tol,
                                           char** json_out);

/* check is one of "conj", "involution", "order". */
PLAB_API plab_status plab_duality_report(plab_context* ctx, const double* matrix,
                                         const char* check, char** json_out);

/* ---- verification ------------------------------------------------------ */

/* format: "json", "csv" or "human". all_passed receives 1/0. */
PLAB_API plab_status plab_verify(plab_context* ctx, const char* format, int with_timestamp,
                                 char** text_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* POLARLAB_H */
