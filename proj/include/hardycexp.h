/* C API for the hardycexp shared library.
 *
 * Conventions:
 *   - complex numbers are passed as interleaved (re, im) double pairs
 *   - every function returns an hc_status; outputs go through pointers
 *   - on failure, hc_last_error() returns a thread-local message
 *   - strings returned through char** are owned by the caller and must be
 *     released with hc_string_free()
 */
#ifndef HARDYCEXP_H
#define HARDYCEXP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERROR_INVALID_ARGUMENT = 1,
  HC_ERROR_DOMAIN = 2,
  HC_ERROR_CONVERGENCE = 3,
  HC_ERROR_INTERNAL = 4
} hc_status;

const char* hc_last_error(void);
void hc_string_free(char* s);

/* ---- finite Blaschke products ---- */

typedef struct hc_blaschke hc_blaschke;

/* zeros: interleaved re,im pairs, `degree` of them; rotation unimodular */
hc_status hc_blaschke_create(const double* zeros, size_t degree, double rot_re, double rot_im,
                             hc_blaschke** out);
void hc_blaschke_destroy(hc_blaschke* b);

hc_status hc_blaschke_eval(const hc_blaschke* b, double w_re, double w_im, double* out_re,
                           double* out_im);
hc_status hc_blaschke_derivative_modulus(const hc_blaschke* b, double theta, double* out);
/* out must hold 2*degree doubles; points are sorted by principal argument */
hc_status hc_blaschke_preimages(const hc_blaschke* b, double z_re, double z_im, double* out);
hc_status hc_blaschke_derivative_sup(const hc_blaschke* b, double* sup, double* argmax_theta);
hc_status hc_blaschke_derivative_inf(const hc_blaschke* b, double* inf);
hc_status hc_blaschke_derivative_bounds(const hc_blaschke* b, double* lower, double* upper);

/* ---- conditional expectation E(.|eta), eta(0) = 0 ---- */

typedef struct hc_cexp hc_cexp;

hc_status hc_cexp_create(const hc_blaschke* b, hc_cexp** out);
void hc_cexp_destroy(hc_cexp* op);

/* poly: interleaved coefficients c_0..c_{ncoeff-1} */
hc_status hc_cexp_apply_pointwise(const hc_cexp* op, const double* poly, size_t ncoeff,
                                  double z_re, double z_im, double* out_re, double* out_im);
/* out: interleaved buffer of capacity cap pairs; *out_len receives the
 * number of coefficients of the expansion */
hc_status hc_cexp_apply_fourier(const hc_cexp* op, const double* poly, size_t ncoeff,
                                size_t band, double* out, size_t cap, size_t* out_len);
hc_status hc_cexp_partition_residual(const hc_cexp* op, double z_re, double z_im, double* out);
hc_status hc_cexp_theoretical_norm(const hc_cexp* op, double p, double* out);
/* schedule: triples (t, half_width, delta), `entries` of them; entries == 0
 * selects the built-in default schedule. csv_out (optional) receives rows
 * t,half_width,delta,ratio,theoretical */
hc_status hc_cexp_empirical_norm(const hc_cexp* op, double p, const double* schedule,
                                 size_t entries, char** csv_out, double* best_ratio);

/* ---- idempotent coefficient multipliers ---- */

/* gamma_json: {"kind":"symbolic","d":3,"J":[1,3]} or
 *             {"kind":"explicit","d":1,"box":[10],"members":[[0],[2]]} */
hc_status hc_multiplier_classify(const char* gamma_json, double p, int with_witness,
                                 uint64_t seed, char** verdict_json);
hc_status hc_multiplier_apply(const char* gamma_json, const char* poly_json, char** out_json);
hc_status hc_multiplier_falsify(const char* gamma_json, double p, unsigned budget, uint64_t seed,
                                char** out_json);
hc_status hc_coefficient_constant(double p, double* out);
hc_status hc_dirichlet_classify(const uint64_t* members, size_t count, uint64_t bound,
                                char** verdict_json);

/* ---- verification ---- */

/* report: one JSON object per line {"check","residual","tolerance","pass"} */
hc_status hc_verify_all(uint64_t seed, char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* HARDYCEXP_H */
