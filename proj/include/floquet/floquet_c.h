/*
 * Copyright (c) 2026 the floquet toolkit developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0.txt
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the floquet toolkit shared library.
 *
 * Conventions:
 *  - Every fallible call returns fq_status; FQ_OK is 0. On failure the
 *    thread-local message from fq_last_error_message() describes the cause.
 *  - Objects are opaque handles created by fq_*_build/create calls and
 *    released with the matching fq_*_free (null-safe).
 *  - Complex matrices cross the boundary as two double arrays (real and
 *    imaginary parts), row-major; amplitude matrices G are indexed
 *    G[beta*dim + alpha] = <beta|U(t,0)|alpha>.
 *  - Units: hbar = 1; energies and frequencies share one unit, times its
 *    inverse.
 */

#ifndef FLOQUET_FLOQUET_C_H
#define FLOQUET_FLOQUET_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fq_status {
  FQ_OK = 0,
  FQ_ERR_INVALID_ARGUMENT = 1,
  FQ_ERR_NOT_COPRIME = 2,
  FQ_ERR_NOT_HERMITIAN = 3,
  FQ_ERR_NOT_UNITARY = 4,
  FQ_ERR_NOT_SQUARE = 5,
  FQ_ERR_CONVERGENCE = 6,
  FQ_ERR_INDEX_OUT_OF_RANGE = 7,
  FQ_ERR_ZERO_BLOCK_MISSING = 8,
  FQ_ERR_MARGIN_TOO_SMALL = 9,
  FQ_ERR_NOT_PERIODIC = 10,
  FQ_ERR_NONUNITARY_DRIFT = 11,
  FQ_ERR_INTERNAL = 12
} fq_status;

typedef struct fq_model fq_model;
typedef struct fq_sft fq_sft;
typedef struct fq_mmft fq_mmft;
typedef struct fq_monodromy fq_monodromy;

const char* fq_version(void);
const char* fq_status_name(fq_status status);
/* Message of the most recent failure on this thread; empty string if none. */
const char* fq_last_error_message(void);

/* ---- driven-system model ------------------------------------------------ */

/* The built-in two-level omega,2omega benchmark with relative phase
 * phi_2omega. */
fq_status fq_model_omega_2omega(double phi_2omega, fq_model** out);

/* A general two-mode model. Frequencies are n1*omega_b and n2*omega_b with
 * gcd(n1, n2) = 1. Coefficient i couples harmonics (ps[i], qs[i]) with the
 * dim_a x dim_a complex matrix stored at re/im + i*dim_a*dim_a; the set must
 * contain the (-p, -q) adjoint partner of every entry. */
fq_status fq_model_create(int dim_a, int n1, int n2, double omega_b, double phi1,
                          double phi2, int n_coeffs, const int* ps, const int* qs,
                          const double* re, const double* im, fq_model** out);
void fq_model_free(fq_model* model);

int fq_model_dim(const fq_model* model);
double fq_model_omega_b(const fq_model* model);
double fq_model_period(const fq_model* model);
/* H(t) into re/im (dim*dim each). */
fq_status fq_model_evaluate(const fq_model* model, double t, double* re, double* im);

/* Phases whose drive the translation block at k describes: the k = 0 sector
 * of H(phi1_out, phi2_out) carries the same spectrum as the k sector of the
 * model as configured (k = N1*phi2 - N2*phi1 up to the model's own phases).
 * The representative returned follows the canonical Bezout pair. */
fq_status fq_model_phase_pair_for_k(const fq_model* model, double k, double* phi1_out,
                                    double* phi2_out);

/* ---- single-mode Floquet picture ---------------------------------------- */

/* Truncated single-mode Floquet Hamiltonian on harmonics -n_max..n_max,
 * diagonalized once at build time. */
fq_status fq_sft_build(const fq_model* model, int n_max, fq_sft** out);
void fq_sft_free(fq_sft* sft);

/* Matrix dimension = (2 n_max + 1) * dim_a. */
int fq_sft_size(const fq_sft* sft);
/* Eigenvalues ascending; `folded` (optional, pass NULL to skip) receives the
 * same values folded into (-omega_b/2, omega_b/2]. */
fq_status fq_sft_eigenvalues(const fq_sft* sft, double* energies, double* folded);
/* Propagator amplitude matrix G(t) (dim_a x dim_a). */
fq_status fq_sft_amplitudes(const fq_sft* sft, double t, double* re, double* im);

/* ---- two-mode Floquet picture ------------------------------------------- */

/* Open square truncation |n1|,|n2| <= n_max, diagonalized at build time. */
fq_status fq_mmft_build_square(const fq_model* model, int n_max, fq_mmft** out);
/* Orbit basis with periodic wrapping: harmonics n_min..n_max, orbit length
 * n_ell (the ell window is centered), block-diagonalized by translation
 * eigenvalue at build time. */
fq_status fq_mmft_build_periodic(const fq_model* model, int n_min, int n_max,
                                 int n_ell, fq_mmft** out);
void fq_mmft_free(fq_mmft* mmft);

int fq_mmft_size(const fq_mmft* mmft);
fq_status fq_mmft_eigenvalues(const fq_mmft* mmft, double* energies, double* folded);
/* Square basis only: two-mode propagator amplitudes G(t). */
fq_status fq_mmft_amplitudes(const fq_mmft* mmft, double t, double* re, double* im);

/* Periodic basis only. Number of translation blocks (= orbit length). */
int fq_mmft_k_count(const fq_mmft* mmft);
fq_status fq_mmft_k_values(const fq_mmft* mmft, double* k_values);
int fq_mmft_k_block_size(const fq_mmft* mmft);
fq_status fq_mmft_k_block_eigenvalues(const fq_mmft* mmft, int k_index,
                                      double* energies, double* folded);
/* max|H T - T H| with T the translation permutation (periodic basis only). */
fq_status fq_mmft_commutation_deviation(const fq_mmft* mmft, double* deviation);
/* Entrywise deviation of the k = 0 block from the single-mode Floquet matrix
 * on the same harmonic range. */
fq_status fq_mmft_k0_sft_deviation(const fq_model* model, const fq_mmft* mmft,
                                   double* deviation);

/* ---- structural checks --------------------------------------------------- */

/* max|H(phi1, phi2) - U^-1 H(0,0) U| on the square basis (exact identity). */
fq_status fq_check_phase_conjugation(const fq_model* model, double phi1, double phi2,
                                     int n_max, double* deviation);
/* Demotion/promotion intertwining on interior columns of the square. */
fq_status fq_check_intertwining(const fq_model* model, int n_max, int margin,
                                double* intertwining_dev, double* dp_identity_dev);

/* ---- direct integration -------------------------------------------------- */

/* Fixed-step RK4 propagator U(t_end, 0); dt <= 0 selects the default step
 * period/4096. renormalize_every = 0 disables re-orthonormalization. */
fq_status fq_integrate(const fq_model* model, double t_end, double dt,
                       int renormalize_every, double* re, double* im);

/* One-period integration plus eigenphase extraction of the monodromy
 * matrix. */
fq_status fq_monodromy_build(const fq_model* model, double dt, int renormalize_every,
                             fq_monodromy** out);
void fq_monodromy_free(fq_monodromy* monodromy);

/* dim_a quasi-energies in (-omega_b/2, omega_b/2], ascending. */
fq_status fq_monodromy_quasi_energies(const fq_monodromy* monodromy, double* energies);
/* U(t, 0) reconstructed from the periodic decomposition. */
fq_status fq_monodromy_propagator(const fq_monodromy* monodromy, double t, double* re,
                                  double* im);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FLOQUET_FLOQUET_C_H */
