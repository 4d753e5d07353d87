/* SPDX-License-Identifier: Apache-2.0
 *
 * gaussens — sampling and statistics of pure Gaussian bosonic states.
 *
 * C interface of the shared library. All functions return a gaussens_status;
 * results come back through out-parameters or opaque handles. On any failure
 * gaussens_last_error() returns a thread-local description of what went
 * wrong. Covariance-matrix buffers are dense row-major 2n x 2n doubles in
 * xxpp ordering (x_1..x_n, p_1..p_n).
 */
#ifndef GAUSSENS_H
#define GAUSSENS_H

#include <stdint.h>

#if defined(_WIN32)
#define GAUSSENS_API __declspec(dllexport)
#else
#define GAUSSENS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gaussens_status {
  GAUSSENS_OK = 0,
  GAUSSENS_ERR_INVALID_ARGUMENT = 1,
  GAUSSENS_ERR_INVARIANT = 2,   /* a physical/structural invariant failed   */
  GAUSSENS_ERR_INFEASIBLE = 3,  /* moment constraints admit no distribution */
  GAUSSENS_ERR_IO = 4,
  GAUSSENS_ERR_INTERNAL = 5
} gaussens_status;

typedef enum gaussens_measure {
  GAUSSENS_MEASURE_MICROCANONICAL = 0, /* flat energies under a total cap E  */
  GAUSSENS_MEASURE_CANONICAL = 1       /* Boltzmann energies at temperature T */
} gaussens_measure;

typedef enum gaussens_log_base {
  GAUSSENS_LOG_BASE_2 = 0,
  GAUSSENS_LOG_BASE_E = 1
} gaussens_log_base;

GAUSSENS_API const char* gaussens_version(void);
GAUSSENS_API const char* gaussens_status_name(gaussens_status status);
GAUSSENS_API const char* gaussens_last_error(void);

/* ---- covariance-matrix toolbox ---------------------------------------- */

/* Symplectic spectrum, descending; nu_out must hold n doubles. */
GAUSSENS_API gaussens_status gaussens_symplectic_eigenvalues(const double* cm, int n,
                                                             double* nu_out);

GAUSSENS_API gaussens_status gaussens_purity(const double* cm, int n, double* out);

GAUSSENS_API gaussens_status gaussens_von_neumann_entropy(const double* cm, int n,
                                                          gaussens_log_base base, double* out);

/* Delta_1..Delta_n; delta_out must hold n doubles. */
GAUSSENS_API gaussens_status gaussens_symplectic_invariants(const double* cm, int n,
                                                            double* delta_out);

GAUSSENS_API gaussens_status gaussens_entropic_h(double x, gaussens_log_base base, double* out);

/* JSON file round trip: {"n":..,"ordering":"xxpp","data":[...]} with 17
 * significant digits; reading back reproduces the doubles bit for bit. */
GAUSSENS_API gaussens_status gaussens_cm_write_json(const double* cm, int n, const char* path);
GAUSSENS_API gaussens_status gaussens_cm_read_json(const char* path, double* cm_out,
                                                   int max_modes, int* n_out);

/* ---- closed forms ------------------------------------------------------ */

/* Mean subsystem entropy (nats) of a random pure state of dimension m*n. */
GAUSSENS_API gaussens_status gaussens_page_entropy(int m, int n, double* out);

/* Moments of a = mu^{-2} of one mode; std_out may be NULL. */
GAUSSENS_API gaussens_status gaussens_canonical_moments(int n, double temperature,
                                                        double* mean_out, double* second_out,
                                                        double* std_out);
GAUSSENS_API gaussens_status gaussens_microcanonical_moments(int n, double total_energy,
                                                             double* mean_out, double* second_out,
                                                             double* std_out);
/* Moments over the compact group alone at fixed per-mode energies. */
GAUSSENS_API gaussens_status gaussens_haar_moments(const double* energies, int n,
                                                   double* mean_out, double* second_out,
                                                   double* std_out);

GAUSSENS_API gaussens_status gaussens_max_inv_purity(double reduced_energy, double* out);

/* Largest m-mode entropy of a pure (m+n)-mode state with energy E. */
GAUSSENS_API gaussens_status gaussens_max_entropy(int m, int n, double total_energy,
                                                  gaussens_log_base base, double* out);

GAUSSENS_API gaussens_status gaussens_asymptotic_entropy(int m, double temperature,
                                                         gaussens_log_base base, double* out);
GAUSSENS_API gaussens_status gaussens_asymptotic_invariant(int d, int m, double temperature,
                                                           double* out);
GAUSSENS_API gaussens_status gaussens_entropy_from_purity(double mu, gaussens_log_base base,
                                                          double* out);

/* Micro-canonical marginal density of one per-mode energy. */
GAUSSENS_API gaussens_status gaussens_mc_marginal_density(double e, int n, double total_energy,
                                                          double* out);

/* ---- certified entropy bounds ------------------------------------------ */

typedef struct gaussens_bounds_result {
  double lower;
  double upper;
  int feasible;
  int bins;
  double duality_gap;
  /* bins carrying weight at each optimum; at most 5 per program */
  int active_lower[8];
  int n_active_lower;
  int active_upper[8];
  int n_active_upper;
} gaussens_bounds_result;

/* Bracket of the micro-canonical mean single-mode entropy at n modes and
 * total energy E, discretised into `bins` cells. Requires n > 2. Returns
 * GAUSSENS_ERR_INFEASIBLE when the linear programs have no solution. */
GAUSSENS_API gaussens_status gaussens_entropy_bounds(int n, double total_energy, int bins,
                                                     gaussens_log_base base,
                                                     gaussens_bounds_result* out);

/* As above but with explicit moments and interval. */
GAUSSENS_API gaussens_status gaussens_entropy_bounds_moments(double mean_a, double mean_a2,
                                                             double a_min, double a_max, int bins,
                                                             gaussens_log_base base,
                                                             gaussens_bounds_result* out);

/* ---- ensembles ---------------------------------------------------------- */

typedef struct gaussens_ensemble_config {
  gaussens_measure measure;
  int n;                 /* total modes */
  int m;                 /* reduction keeps the first m modes */
  double total_energy;   /* micro-canonical cap E (units: vacuum mode = 2) */
  double temperature;    /* canonical T */
  long long samples;
  uint64_t seed;
  gaussens_log_base log_base;
  int threads;           /* 0: hardware concurrency */
  int check_all;         /* verify structural invariants on every sample */
  const char* dump_states_path; /* optional per-sample (E, X, Y) JSON lines */
} gaussens_ensemble_config;

typedef struct gaussens_ensemble_summary {
  long long samples;
  double mean_entropy, std_entropy, se_entropy;
  double mean_inv_purity, std_inv_purity, se_inv_purity;
  double entropy_max;          /* NaN when the measure has no energy cap */
  double max_distance_sd;      /* (entropy_max - mean)/std */
  double max_distance_sd_se;   /* delete-one jackknife */
} gaussens_ensemble_summary;

typedef struct gaussens_ensemble gaussens_ensemble; /* opaque */

/* Draw the configured number of states and keep per-sample records. Sample i
 * is a pure function of (seed, i): identical configurations give identical
 * results for any thread count. */
GAUSSENS_API gaussens_status gaussens_ensemble_run(const gaussens_ensemble_config* config,
                                                   gaussens_ensemble** out);
GAUSSENS_API void gaussens_ensemble_free(gaussens_ensemble* ensemble);

GAUSSENS_API gaussens_status gaussens_ensemble_summary_get(const gaussens_ensemble* ensemble,
                                                           gaussens_ensemble_summary* out);

/* Copies min(cap, samples) reduced entropies; returns the number copied in
 * *n_out (pass cap = 0 with out = NULL to query the count). */
GAUSSENS_API gaussens_status gaussens_ensemble_entropies(const gaussens_ensemble* ensemble,
                                                         double* out, long long cap,
                                                         long long* n_out);

GAUSSENS_API gaussens_status gaussens_ensemble_write_samples_csv(const gaussens_ensemble* ensemble,
                                                                 const char* path);
GAUSSENS_API gaussens_status gaussens_ensemble_write_summary_json(const gaussens_ensemble* ensemble,
                                                                  const char* path);
GAUSSENS_API gaussens_status gaussens_ensemble_write_json(const gaussens_ensemble* ensemble,
                                                          const char* path);

/* Equal-width histogram of the reduced entropy on [lo, hi]; edges_out needs
 * bins + 1 doubles, counts_out needs bins entries. */
GAUSSENS_API gaussens_status gaussens_ensemble_histogram(const gaussens_ensemble* ensemble,
                                                         int bins, double lo, double hi,
                                                         double* edges_out, long long* counts_out);

/* Histogram a previously written samples CSV into another CSV. Pass hi <= lo
 * to use [0, max value]. */
GAUSSENS_API gaussens_status gaussens_histogram_csv(const char* samples_csv, int bins, double lo,
                                                    double hi, const char* out_csv);

/* ---- scans -------------------------------------------------------------- */

typedef struct gaussens_scan gaussens_scan; /* opaque table */

/* Variance-to-mean ratio of the reduced entropy across system sizes.
 * `parameter` is energy per mode (micro-canonical) or temperature
 * (canonical). Columns: n, samples, mean_entropy, var_entropy,
 * var_over_mean, var_over_mean_se. */
GAUSSENS_API gaussens_status gaussens_concentration_scan(const int* ns, int n_count,
                                                         gaussens_measure measure,
                                                         double parameter, int m,
                                                         long long samples, uint64_t seed,
                                                         gaussens_log_base base, int threads,
                                                         gaussens_scan** out);

/* Entropy against reduction size. Columns: n, m, mean_entropy, std_entropy,
 * se_entropy. Micro-canonical with energy E = energy_per_mode * n. */
GAUSSENS_API gaussens_status gaussens_mdep_scan(const int* ns, int n_count, int m_max,
                                                double energy_per_mode, long long samples,
                                                uint64_t seed, gaussens_log_base base,
                                                int threads, gaussens_scan** out);

GAUSSENS_API void gaussens_scan_free(gaussens_scan* scan);
GAUSSENS_API int gaussens_scan_rows(const gaussens_scan* scan);
GAUSSENS_API int gaussens_scan_cols(const gaussens_scan* scan);
GAUSSENS_API const char* gaussens_scan_column_name(const gaussens_scan* scan, int col);
GAUSSENS_API gaussens_status gaussens_scan_cell(const gaussens_scan* scan, int row, int col,
                                                double* out);
GAUSSENS_API gaussens_status gaussens_scan_write_csv(const gaussens_scan* scan, const char* path);

/* Power-law fit of var/mean against n (concentration scans only). */
GAUSSENS_API gaussens_status gaussens_scan_fit(const gaussens_scan* scan, double* slope,
                                               double* slope_se, double* intercept,
                                               double* intercept_se);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GAUSSENS_H */
