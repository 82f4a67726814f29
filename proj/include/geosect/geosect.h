/* Copyright 2026 The Geosect Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Cface of the geosect library: spectral constants of spherical and
 * discrete Radon transforms, plus the Monte Carlo experiments built on
 * them.  Every entry point returns a gs_status; on failure the thread-local
 * gs_last_error() holds a message.  Experiments hand back an opaque
 * gs_report that owns a canonical JSON document and a CSV side table.
 */

#ifndef GEOSECT_GEOSECT_H_
#define GEOSECT_GEOSECT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INTERNAL = 1, /* unexpected failure */
  GS_ERR_CONFIG = 2,   /* invalid parameters */
  GS_ERR_NUMERIC = 3   /* computation could not reach its tolerance */
} gs_status;

/* Message for the most recent failure on this thread; empty string if none. */
const char* gs_last_error(void);

/* ---- scalar queries ----------------------------------------------------
 * lambda^2 values are eigenvalues of S_k = R_k* R_k on S^{n-1}; `ell`
 * indexes the even harmonic degree 2 ell.
 */
gs_status gs_eigenvalue_general(int n, int k, int ell, double* out);
gs_status gs_eigenvalue_quadrature(int n, int k, int degree, double* out);
gs_status gs_eigenvalue_k2(int n, int ell, double* out);
gs_status gs_eigenvalue_ratio(int n, int k, int ell, double* out);
gs_status gs_correlation_eigenvalue(int n, int ell, double* out);
gs_status gs_variance_bound(int n, int k, double sigma_a, double* out);
gs_status gs_band_measure(int n, double threshold, double* out);
gs_status gs_band_threshold(int n, double target, double* out);
gs_status gs_tau(int k, double* out);
gs_status gs_gegenbauer(int n, int ell, double t, double* out);

/* ---- reports ----------------------------------------------------------- */

typedef struct gs_report gs_report;

/* Borrowed pointers, valid until gs_report_free. */
const char* gs_report_json(const gs_report* r);
const char* gs_report_csv(const gs_report* r);
void gs_report_free(gs_report* r);

/* lambda^2 table for ell = 0..lmax; CSV columns n,k,ell,lambda_sq. */
gs_status gs_spectrum_table(int n, int k, int lmax, gs_report** out);

/* Zero-initialize configs, then set fields; zero means "default" wherever a
 * default exists (bins -> 60, grid -> 512, workers -> 1).
 */

typedef struct gs_sphere_config {
  int n;
  int k;
  const char* set;    /* "band" | "central_band" | "hemisphere" */
  int by_measure;     /* nonzero: solve threshold from `measure` */
  double measure;
  double threshold;
  int tangent_model;  /* k = 2 point-plus-tangent sampler */
  uint64_t samples;
  uint64_t seed;
  int bins;
  int workers;
} gs_sphere_config;

gs_status gs_run_sphere(const gs_sphere_config* cfg, gs_report** out);

typedef struct gs_sharpness_config {
  const int* dims;
  int ndims;
  uint64_t samples;
  uint64_t seed;
  int workers;
} gs_sharpness_config;

gs_status gs_run_sharpness(const gs_sharpness_config* cfg, gs_report** out);

typedef struct gs_correlation_config {
  int n;
  int k;
  uint64_t samples;
  uint64_t seed;
  int bins;
  int workers;
} gs_correlation_config;

gs_status gs_run_correlation(const gs_correlation_config* cfg,
                             gs_report** out);

typedef struct gs_convex_config {
  const char* body; /* "ball" | "cube" | "simplex" */
  int n;
  uint64_t samples;
  uint64_t seed;
  int bins;
  int workers;
  int axis;              /* slab direction e_axis */
  double slab_tolerance; /* 0 -> default 5e-3 */
} gs_convex_config;

gs_status gs_run_zero_one(const gs_convex_config* cfg, gs_report** out);
gs_status gs_run_tails(const gs_convex_config* cfg, gs_report** out);

typedef struct gs_ellipse_config {
  int n;
  uint64_t samples;
  uint64_t seed;
  int bins;
  int grid; /* curve-parameter points per ellipse */
  int workers;
} gs_ellipse_config;

gs_status gs_run_ellipse(const gs_ellipse_config* cfg, gs_report** out);

typedef struct gs_torus_config {
  int64_t p;
  int n;
  int exhaustive; /* nonzero: sweep all (a, b != 0) pairs */
  uint64_t samples;
  uint64_t seed;
  int workers;
} gs_torus_config;

gs_status gs_run_torus(const gs_torus_config* cfg, gs_report** out);

/* Spectrum of the discrete S operator; exact nonzero switches to integer
 * counting mode. */
gs_status gs_torus_eigen_check(int64_t p, int n, int exact, gs_report** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GEOSECT_GEOSECT_H_ */
