#ifndef GMM_GMM_H
#define GMM_GMM_H

/* C interface to the generalized matrix mechanics library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * function returns a gmm_status; on failure gmm_last_error() describes the
 * problem for the calling thread. Strings returned through char** are owned
 * by the caller and released with gmm_string_free. Indices are 1-based. */

#include <stddef.h>
#include <stdint.h>

#if defined(GMM_BUILDING_LIBRARY)
#define GMM_API __attribute__((visibility("default")))
#else
#define GMM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmm_status {
  GMM_OK = 0,
  GMM_ERR_INVALID_ARGUMENT = 1,
  GMM_ERR_INDEX = 2,
  GMM_ERR_SHAPE = 3,
  GMM_ERR_ARITY = 4,
  GMM_ERR_VALIDATION = 5,
  GMM_ERR_DOMAIN = 6,
  GMM_ERR_IO = 7,
  GMM_ERR_DIVERGENCE = 8,
  GMM_ERR_INTERNAL = 9
} gmm_status;

typedef struct gmm_matrix gmm_matrix;
typedef struct gmm_nambu_system gmm_nambu_system;

GMM_API const char* gmm_version(void);
GMM_API const char* gmm_last_error(void);
GMM_API const char* gmm_status_name(gmm_status status);
GMM_API void gmm_string_free(char* s);

/* Generalized matrices: rank n >= 2 indices, each running over 1..dim. */
GMM_API gmm_status gmm_matrix_zero(int rank, int dim, gmm_matrix** out);
GMM_API gmm_status gmm_matrix_identity(int rank, int dim, gmm_matrix** out);
/* Normal form built from an antisymmetric dim x dim row-major table. */
GMM_API gmm_status gmm_matrix_normal(int rank, int dim, const double* table, gmm_matrix** out);
GMM_API gmm_status gmm_matrix_clone(const gmm_matrix* m, gmm_matrix** out);
GMM_API void gmm_matrix_free(gmm_matrix* m);
GMM_API gmm_status gmm_matrix_shape(const gmm_matrix* m, int* rank, int* dim);
GMM_API gmm_status gmm_matrix_get(const gmm_matrix* m, const int* idx, double* re, double* im);
GMM_API gmm_status gmm_matrix_set(gmm_matrix* m, const int* idx, double re, double im);
GMM_API gmm_status gmm_matrix_max_abs_diff(const gmm_matrix* a, const gmm_matrix* b, double* out);

/* Operations on `count` matrices; count must equal the common rank. */
GMM_API gmm_status gmm_product(const gmm_matrix* const* factors, size_t count, gmm_matrix** out);
GMM_API gmm_status gmm_commutator(const gmm_matrix* const* args, size_t count, gmm_matrix** out);
GMM_API gmm_status gmm_anticommutator(const gmm_matrix* const* args, size_t count, gmm_matrix** out);

/* Runs the property suites; options as for `gmm verify`. suite may be NULL
 * for "all", threads 0 for automatic. *all_pass is 1 when every case passes. */
GMM_API gmm_status gmm_verify(int n, int dim, uint64_t seed, double tol, const char* suite, unsigned threads,
                              char** report_json, int* all_pass);

/* Frequencies from an input specification document. */
GMM_API gmm_status gmm_spectrum_from_json(const char* input_json, char** spectrum_json);

/* Fermionic oscillator relations for n in {2, 3} at the given times. */
GMM_API gmm_status gmm_oscillator_report(int n, double omega, const double* times, size_t count, char** report_json,
                                         int* all_pass);

/* Classical Nambu systems. */
GMM_API gmm_status gmm_nambu_system_from_json(const char* system_json, gmm_nambu_system** out);
GMM_API void gmm_nambu_system_free(gmm_nambu_system* sys);
GMM_API gmm_status gmm_nambu_system_dim(const gmm_nambu_system* sys, int* dim);
/* Integrates with RK4 from t = 0 to t1. The CSV trajectory and JSON summary
 * are produced even when the run diverges, in which case the status is
 * GMM_ERR_DIVERGENCE. Either output pointer may be NULL. */
GMM_API gmm_status gmm_nambu_integrate(const gmm_nambu_system* sys, const double* x0, size_t count, double t1,
                                       double dt, char** trajectory_csv, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif
