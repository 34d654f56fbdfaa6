#ifndef QDIV_H
#define QDIV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QdivStatus {
  QDIV_STATUS_OK = 0,
  QDIV_STATUS_NULL_POINTER = 1,
  QDIV_STATUS_INVALID_ARGUMENT = 2,
  QDIV_STATUS_NOT_HERMITIAN = 3,
  QDIV_STATUS_NOT_POSITIVE = 4,
  QDIV_STATUS_TRACE_NOT_ONE = 5,
  QDIV_STATUS_NOT_NORMALIZED = 6,
  QDIV_STATUS_OUT_OF_RANGE = 7,
  QDIV_STATUS_DIMENSION_MISMATCH = 8,
  QDIV_STATUS_NO_CONVERGENCE = 9,
  QDIV_STATUS_DOMAIN_ERROR = 10,
  QDIV_STATUS_ZERO_POINT = 11,
  QDIV_STATUS_BUFFER_TOO_SMALL = 12,
  QDIV_STATUS_PANIC = 13,
} QdivStatus;

typedef enum QdivBellKind {
  QDIV_BELL_KIND_PSI_MINUS = 0,
  QDIV_BELL_KIND_PSI_PLUS = 1,
  QDIV_BELL_KIND_PHI_PLUS = 2,
  QDIV_BELL_KIND_PHI_MINUS = 3,
} QdivBellKind;

/**
 * Opaque validated density matrix.
 */
typedef struct QdivDensity QdivDensity;

/**
 * Opaque normalized state vector.
 */
typedef struct QdivPure QdivPure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *qdiv_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *qdiv_version(void);

/**
 * Validates a `dim x dim` row-major matrix given as `2 * dim * dim` interleaved doubles.
 *
 * # Safety
 * `entries` must point to `2 * dim * dim` readable doubles; `out` must be writable.
 */
enum QdivStatus qdiv_density_from_entries(size_t dim,
                                          const double *entries,
                                          struct QdivDensity **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_density_maximally_mixed(size_t dim, struct QdivDensity **out);

/**
 * Werner state with singlet weight `f` in `[1/4, 1]`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_density_werner(double f, struct QdivDensity **out);

/**
 * Seeded Hilbert-Schmidt random state.
 *
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_density_random(size_t dim, uint64_t seed, struct QdivDensity **out);

/**
 * Projector `|psi><psi|`.
 *
 * # Safety
 * `psi` must be a live handle or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_density_from_pure(const struct QdivPure *psi, struct QdivDensity **out);

/**
 * `a ⊗ b`.
 *
 * # Safety
 * `a`, `b` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_density_tensor(const struct QdivDensity *a,
                                    const struct QdivDensity *b,
                                    struct QdivDensity **out);

/**
 * Dimension of the state, or 0 for NULL.
 *
 * # Safety
 * `rho` must be a live handle or NULL.
 */
size_t qdiv_density_dim(const struct QdivDensity *rho);

/**
 * Writes the `dim` ascending eigenvalues into `out` (capacity `len`).
 *
 * # Safety
 * `rho` must be a live handle or NULL; `out` must have room for `len` doubles.
 */
enum QdivStatus qdiv_density_eigenvalues(const struct QdivDensity *rho, double *out, size_t len);

/**
 * Writes the row-major matrix as `2 * dim * dim` interleaved doubles into `out` (capacity `len`).
 *
 * # Safety
 * `rho` must be a live handle or NULL; `out` must have room for `len` doubles.
 */
enum QdivStatus qdiv_density_entries(const struct QdivDensity *rho, double *out, size_t len);

/**
 * # Safety
 * `rho` must be NULL or a handle not yet freed.
 */
void qdiv_density_free(struct QdivDensity *rho);

/**
 * Normalized vector from `2 * dim` interleaved doubles; rejects norms off by more than 1e-10.
 *
 * # Safety
 * `amplitudes` must point to `2 * dim` readable doubles; `out` must be writable.
 */
enum QdivStatus qdiv_pure_from_amplitudes(size_t dim,
                                          const double *amplitudes,
                                          struct QdivPure **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_pure_bell(enum QdivBellKind kind, struct QdivPure **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_pure_random(size_t dim, uint64_t seed, struct QdivPure **out);

/**
 * # Safety
 * `psi` must be a live handle or NULL.
 */
size_t qdiv_pure_dim(const struct QdivPure *psi);

/**
 * # Safety
 * `psi` must be NULL or a handle not yet freed.
 */
void qdiv_pure_free(struct QdivPure *psi);

/**
 * Fidelity `F[sigma, rho]`.
 *
 * # Safety
 * `sigma`, `rho` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_fidelity(const struct QdivDensity *sigma,
                              const struct QdivDensity *rho,
                              double *out);

/**
 * Squared Bures distance `2 - 2 sqrt(F)`.
 *
 * # Safety
 * `sigma`, `rho` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_bures_metric_sq(const struct QdivDensity *sigma,
                                     const struct QdivDensity *rho,
                                     double *out);

/**
 * Quantum KL divergence in nats; `INFINITY` when the support of `rho` exceeds that of `sigma`.
 *
 * # Safety
 * `rho`, `sigma` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_kl_divergence(const struct QdivDensity *rho,
                                   const struct QdivDensity *sigma,
                                   double *out);

/**
 * q-divergence from matrix powers.
 *
 * # Safety
 * `rho`, `sigma` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_q_divergence(const struct QdivDensity *rho,
                                  const struct QdivDensity *sigma,
                                  double q,
                                  double *out);

/**
 * q-divergence from the eigenbasis double sum.
 *
 * # Safety
 * `rho`, `sigma` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_q_divergence_eigensum(const struct QdivDensity *rho,
                                           const struct QdivDensity *sigma,
                                           double q,
                                           double *out);

/**
 * q-divergence from the Jackson derivative.
 *
 * # Safety
 * `rho`, `sigma` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_q_divergence_jackson(const struct QdivDensity *rho,
                                          const struct QdivDensity *sigma,
                                          double q,
                                          double *out);

/**
 * `(1 - <psi|rho^q|psi>) / (1 - q)`.
 *
 * # Safety
 * `rho`, `psi` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_q_divergence_pure_ref(const struct QdivDensity *rho,
                                           const struct QdivPure *psi,
                                           double q,
                                           double *out);

/**
 * `1 - |<phi|psi>|^2`.
 *
 * # Safety
 * `phi`, `psi` must be live handles or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_fubini_study_sq(const struct QdivPure *phi,
                                     const struct QdivPure *psi,
                                     double *out);

/**
 * # Safety
 * `rho` must be a live handle or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_von_neumann_entropy(const struct QdivDensity *rho, double *out);

/**
 * # Safety
 * `rho` must be a live handle or NULL; `out` must be writable.
 */
enum QdivStatus qdiv_tsallis_entropy(const struct QdivDensity *rho, double q, double *out);

/**
 * `(1 - F^q) / (1 - q)` for the Werner family against the singlet.
 *
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_werner_q_divergence_closed(double f, double q, double *out);

/**
 * q-logarithm `(x^(1-q) - 1) / (1 - q)`, `x >= 0`.
 *
 * # Safety
 * `out` must be writable.
 */
enum QdivStatus qdiv_q_log(double x, double q, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QDIV_H */
