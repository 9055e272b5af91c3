/* bbgeo: geometric analysis and design of bang-bang pulse sequences.
 *
 * C interface to the shared library. All functions return a bbgeo_status;
 * on failure, bbgeo_last_error() gives a thread-local description. Complex
 * matrices cross the boundary as paired row-major real/imag arrays. Strings
 * returned through char** are owned by the caller and released with
 * bbgeo_string_free().
 */
#ifndef BBGEO_H
#define BBGEO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bbgeo_status {
  BBGEO_OK = 0,
  BBGEO_ERROR_INVALID_ARGUMENT = 1, /* null pointer, bad enum value, ... */
  BBGEO_ERROR_SHAPE = 2,            /* operand dimensions or bases mismatch */
  BBGEO_ERROR_VALIDITY = 3,         /* non-Hermitian / non-unitary / bad weights */
  BBGEO_ERROR_DIMENSION = 4,        /* dimension parameter out of range */
  BBGEO_ERROR_CONFIG = 5,           /* config cannot be parsed or validated */
  BBGEO_ERROR_BUDGET = 6,           /* search subset count exceeds the cap */
  BBGEO_ERROR_BRANCH_CUT = 7,       /* matrix-log eigenphase at +/-pi */
  BBGEO_ERROR_INTERNAL = 8
} bbgeo_status;

const char* bbgeo_status_name(bbgeo_status status);
const char* bbgeo_last_error(void);
const char* bbgeo_version(void);
void bbgeo_string_free(char* text);

/* --- generator bases ----------------------------------------------------
 * kind: "pauli" (param ignored), "gell-mann" (param = n >= 2),
 *       "pauli-tensor" (param = qubit count >= 1).
 */
typedef struct bbgeo_basis bbgeo_basis;

bbgeo_status bbgeo_basis_create(const char* kind, int32_t param, bbgeo_basis** out);
void bbgeo_basis_destroy(bbgeo_basis* basis);
int32_t bbgeo_basis_dimension(const bbgeo_basis* basis);     /* n */
int32_t bbgeo_basis_count(const bbgeo_basis* basis);         /* N = n^2 - 1 */
double bbgeo_basis_normalization(const bbgeo_basis* basis);  /* M */

/* Element index in [0, N); re/im hold n*n entries each. */
bbgeo_status bbgeo_basis_element(const bbgeo_basis* basis, int32_t index,
                                 double* re, double* im);

/* coeffs holds N entries: a_i = (1/M) Tr(l_i S); identity part stripped. */
bbgeo_status bbgeo_expand(const bbgeo_basis* basis, const double* re,
                          const double* im, double* coeffs);

/* S = sum_i a_i l_i written to re/im (n*n each). */
bbgeo_status bbgeo_reconstruct(const bbgeo_basis* basis, const double* coeffs,
                               double* re, double* im);

/* Column-action rotation of the conjugation S -> U^dag S U; rotation holds
 * N*N row-major entries. Composition reverses: R(UV) = R(V) R(U). */
bbgeo_status bbgeo_adjoint_rotation(const bbgeo_basis* basis, const double* u_re,
                                    const double* u_im, double* rotation);

/* --- pulse sets ---------------------------------------------------------- */
typedef struct bbgeo_pulse_set bbgeo_pulse_set;

/* count unitaries of size dim x dim, concatenated row-major; the first must
 * be the identity. Uniform weights. */
bbgeo_status bbgeo_pulse_set_create(const double* re, const double* im,
                                    int32_t count, int32_t dim,
                                    bbgeo_pulse_set** out);

/* Catalog names: "parity-kick", "c3", "c4", "vierergruppe", "tetrahedron",
 * "two-qubit-exchange". */
bbgeo_status bbgeo_pulse_set_from_sequence(const char* name, bbgeo_pulse_set** out);
void bbgeo_pulse_set_destroy(bbgeo_pulse_set* pulses);
int32_t bbgeo_pulse_set_size(const bbgeo_pulse_set* pulses);
int32_t bbgeo_pulse_set_dimension(const bbgeo_pulse_set* pulses);

/* *closed = 1 if products and inverses stay in the set up to global phase. */
bbgeo_status bbgeo_pulse_set_verify_closure(bbgeo_pulse_set* pulses, double tol,
                                            int32_t* closed);

/* averaged = sum_k w_k R_k coeffs (N entries in and out). */
bbgeo_status bbgeo_average_vector(const bbgeo_basis* basis,
                                  const bbgeo_pulse_set* pulses,
                                  const double* coeffs, double* averaged);

/* --- whole-problem runs (the CLI surface) --------------------------------
 * config_json follows the documented problem schema. Reports are returned
 * as newly allocated strings.
 */
typedef struct bbgeo_options {
  double tolerance;       /* <= 0: keep the config value */
  const double* delta_t;  /* NULL: keep the config list */
  int32_t delta_t_count;
  int64_t search_budget;  /* <= 0: keep the config value */
  int32_t search_top_k;   /* <= 0: keep the config value */
} bbgeo_options;

bbgeo_status bbgeo_run_analyze(const char* config_json, const bbgeo_options* options,
                               char** report_json);

/* format: "structured" (JSON) or "csv". */
bbgeo_status bbgeo_run_simulate(const char* config_json, const char* format,
                                const bbgeo_options* options, char** report);

bbgeo_status bbgeo_run_search(const char* config_json, const bbgeo_options* options,
                              char** report_json);

bbgeo_status bbgeo_run_catalog(char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* BBGEO_H */
