#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gmm/gmm.h"

static int failures = 0;

#define EXPECT(cond)                                                \
  do {                                                              \
    if (!(cond)) {                                                  \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                   \
    }                                                               \
  } while (0)

static void rank2_commutator(void) {
  const double a[2][2] = {{1.0, 2.0}, {3.0, 4.0}};
  const double b[2][2] = {{0.5, -1.0}, {2.0, 0.0}};
  gmm_matrix *ma = NULL, *mb = NULL, *c = NULL;
  EXPECT(gmm_matrix_zero(2, 2, &ma) == GMM_OK);
  EXPECT(gmm_matrix_zero(2, 2, &mb) == GMM_OK);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const int idx[2] = {i, j};
      gmm_matrix_set(ma, idx, a[i - 1][j - 1], 0.0);
      gmm_matrix_set(mb, idx, b[i - 1][j - 1], 0.0);
    }
  const gmm_matrix* args[2] = {ma, mb};
  EXPECT(gmm_commutator(args, 2, &c) == GMM_OK);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      double want = 0.0;
      for (int k = 0; k < 2; ++k) want += a[i - 1][k] * b[k][j - 1] - b[i - 1][k] * a[k][j - 1];
      const int idx[2] = {i, j};
      double re = 0.0, im = 0.0;
      EXPECT(gmm_matrix_get(c, idx, &re, &im) == GMM_OK);
      EXPECT(fabs(re - want) < 1e-14 && im == 0.0);
    }
  gmm_matrix_free(ma);
  gmm_matrix_free(mb);
  gmm_matrix_free(c);
}

static void normal_and_identity(void) {
  const double table[9] = {0.0, 1.0, -2.0, -1.0, 0.0, 0.5, 2.0, -0.5, 0.0};
  gmm_matrix *h = NULL, *id = NULL, *a = NULL, *c = NULL;
  EXPECT(gmm_matrix_normal(3, 3, table, &h) == GMM_OK);
  EXPECT(gmm_matrix_identity(3, 3, &id) == GMM_OK);
  const int idx[3] = {1, 2, 2};
  double re = 0.0, im = 0.0;
  EXPECT(gmm_matrix_get(id, idx, &re, &im) == GMM_OK && re == 1.0);
  int rank = 0, dim = 0;
  EXPECT(gmm_matrix_shape(h, &rank, &dim) == GMM_OK && rank == 3 && dim == 3);

  /* [I, I, I] vanishes. */
  const gmm_matrix* ids[3] = {id, id, id};
  EXPECT(gmm_commutator(ids, 3, &c) == GMM_OK);
  gmm_matrix* zero = NULL;
  gmm_matrix_zero(3, 3, &zero);
  double d = 1.0;
  EXPECT(gmm_matrix_max_abs_diff(c, zero, &d) == GMM_OK && d == 0.0);

  EXPECT(gmm_matrix_clone(h, &a) == GMM_OK);
  EXPECT(gmm_matrix_max_abs_diff(a, h, &d) == GMM_OK && d == 0.0);

  const double bad[4] = {0.0, 1.0, 1.0, 0.0};
  gmm_matrix* nope = NULL;
  EXPECT(gmm_matrix_normal(3, 2, bad, &nope) == GMM_ERR_VALIDATION);
  EXPECT(nope == NULL);
  EXPECT(strlen(gmm_last_error()) > 0);

  gmm_matrix_free(h);
  gmm_matrix_free(id);
  gmm_matrix_free(a);
  gmm_matrix_free(c);
  gmm_matrix_free(zero);
}

static void errors(void) {
  gmm_matrix* m = NULL;
  EXPECT(gmm_matrix_zero(1, 3, &m) != GMM_OK);
  EXPECT(gmm_matrix_zero(3, 3, &m) == GMM_OK);
  const int idx[3] = {0, 1, 1};
  double re, im;
  EXPECT(gmm_matrix_get(m, idx, &re, &im) == GMM_ERR_INDEX);
  EXPECT(gmm_matrix_get(NULL, idx, &re, &im) == GMM_ERR_INVALID_ARGUMENT);
  gmm_matrix* other = NULL;
  gmm_matrix_zero(3, 4, &other);
  const gmm_matrix* args[2] = {m, other};
  gmm_matrix* out = NULL;
  EXPECT(gmm_product(args, 2, &out) != GMM_OK);
  EXPECT(strcmp(gmm_status_name(GMM_ERR_DIVERGENCE), "") != 0);
  EXPECT(gmm_version() != NULL);
  gmm_matrix_free(m);
  gmm_matrix_free(other);
}

static void reports(void) {
  char* json = NULL;
  int pass = 0;
  EXPECT(gmm_verify(3, 3, 42, 1e-10, "cohomology", 1, &json, &pass) == GMM_OK);
  EXPECT(pass == 1 && json != NULL && strstr(json, "\"cases\"") != NULL);
  gmm_string_free(json);
  EXPECT(gmm_verify(1, 3, 42, 1e-10, NULL, 0, &json, &pass) == GMM_ERR_INVALID_ARGUMENT);

  const double times[2] = {0.0, 0.5};
  EXPECT(gmm_oscillator_report(3, 1.0, times, 2, &json, &pass) == GMM_OK && pass == 1);
  gmm_string_free(json);
  EXPECT(gmm_oscillator_report(4, 1.0, times, 2, &json, &pass) != GMM_OK);

  EXPECT(gmm_spectrum_from_json("{\"n\": 2, \"N\": 2, \"potentials\": [[0, 1]]}", &json) == GMM_OK);
  EXPECT(strstr(json, "\"nu\"") != NULL);
  gmm_string_free(json);
  EXPECT(gmm_spectrum_from_json("{\"n\": 2}", &json) == GMM_ERR_VALIDATION);
  EXPECT(strstr(gmm_last_error(), "'N'") != NULL);
}

static void nambu(void) {
  gmm_nambu_system* sys = NULL;
  EXPECT(gmm_nambu_system_from_json("{\"preset\": \"harmonic\"}", &sys) == GMM_OK);
  int dim = 0;
  EXPECT(gmm_nambu_system_dim(sys, &dim) == GMM_OK && dim == 2);
  const double x0[2] = {1.0, 0.0};
  char *csv = NULL, *summary = NULL;
  EXPECT(gmm_nambu_integrate(sys, x0, 2, 1.0, 0.01, &csv, &summary) == GMM_OK);
  EXPECT(strncmp(csv, "t,x1,x2,H1\n", 11) == 0);
  EXPECT(strstr(summary, "\"max_drift\"") != NULL);
  gmm_string_free(csv);
  gmm_string_free(summary);
  EXPECT(gmm_nambu_integrate(sys, x0, 1, 1.0, 0.01, NULL, NULL) != GMM_OK);
  gmm_nambu_system_free(sys);

  EXPECT(gmm_nambu_system_from_json(
             "{\"dim\": 2, \"hamiltonians\": [{\"terms\": [{\"coef\": 1, \"pow\": [2, 1]}]}]}", &sys) == GMM_OK);
  const double start[2] = {1.0, 1.0};
  csv = NULL;
  EXPECT(gmm_nambu_integrate(sys, start, 2, 100.0, 0.01, &csv, NULL) == GMM_ERR_DIVERGENCE);
  EXPECT(csv != NULL);
  gmm_string_free(csv);
  gmm_nambu_system_free(sys);
}

int main(void) {
  rank2_commutator();
  normal_and_identity();
  errors();
  reports();
  nambu();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
