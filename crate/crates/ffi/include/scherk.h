#ifndef SCHERK_H
#define SCHERK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

typedef enum ScherkCase {
  SCHERK_CASE_A = 0,
  SCHERK_CASE_B = 1,
  SCHERK_CASE_C = 2,
  SCHERK_CASE_D = 3,
  SCHERK_CASE_TRAPEZOID_Q2P = 4,
  SCHERK_CASE_TRAPEZOID_Q_PI = 5,
  SCHERK_CASE_CENTER = 6,
} ScherkCase;

typedef enum ScherkStatus {
  SCHERK_STATUS_OK = 0,
  SCHERK_STATUS_NULL_POINTER = 1,
  /**
   * Parameters outside the admissible region, or an invalid argument.
   */
  SCHERK_STATUS_DOMAIN = 2,
  /**
   * The zero locator did not converge.
   */
  SCHERK_STATUS_CONVERGENCE = 3,
  SCHERK_STATUS_DEGENERATE = 4,
  SCHERK_STATUS_IO = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  SCHERK_STATUS_INTERNAL = 6,
} ScherkStatus;

/**
 * Opaque handle to one surface of the family.
 */
typedef struct ScherkSurface ScherkSurface;

typedef struct ScherkGeometry {
  double p;
  double q;
  double beta;
  double alpha;
  double x;
  double y;
  double s;
  enum ScherkCase case_label;
} ScherkGeometry;

typedef struct ScherkComplex {
  double re;
  double im;
} ScherkComplex;

typedef struct ScherkWeierstrass {
  struct ScherkComplex a;
  struct ScherkComplex b;
  double theta;
} ScherkWeierstrass;

/**
 * Point `(u, v, T)` of the surface.
 */
typedef struct ScherkPoint {
  double u;
  double v;
  double t;
} ScherkPoint;

typedef struct ScherkCurvature {
  struct ScherkComplex z_zero;
  double residual;
  double k;
  double k_cross;
  double re_za;
  double bound_margin;
} ScherkCurvature;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *scherk_status_message(enum ScherkStatus status);

/**
 * Whether `(p, q)` lies in the admissible region.
 */
bool scherk_in_region(double p, double q);

/**
 * `pi^2 / (2 R^2)`.
 *
 * # Safety
 * `out` must be null or point to writable memory for one `double`.
 */
enum ScherkStatus scherk_heinz_bound(double radius, double *out);

/**
 * Creates a surface. On success `*out` holds a handle owned by the caller.
 *
 * # Safety
 * `out` must be null or point to writable memory for one pointer.
 */
enum ScherkStatus scherk_surface_new(double p, double q, struct ScherkSurface **out);

/**
 * Releases a handle. Null is accepted.
 *
 * # Safety
 * `surface` must be null or a handle from [`scherk_surface_new`] not yet freed.
 */
void scherk_surface_free(struct ScherkSurface *surface);

/**
 * # Safety
 * `surface` must be a live handle or null; `out` must be null or writable.
 */
enum ScherkStatus scherk_surface_geometry(const struct ScherkSurface *surface,
                                          struct ScherkGeometry *out);

/**
 * # Safety
 * `surface` must be a live handle or null; `out` must be null or writable.
 */
enum ScherkStatus scherk_surface_weierstrass(const struct ScherkSurface *surface,
                                             struct ScherkWeierstrass *out);

/**
 * Evaluates the surface over the parameter `z = re + i im`, `|z| < 1`.
 *
 * # Safety
 * `surface` must be a live handle or null; `out` must be null or writable.
 */
enum ScherkStatus scherk_surface_eval(const struct ScherkSurface *surface,
                                      double re,
                                      double im,
                                      struct ScherkPoint *out);

/**
 * Locates the preimage of the origin and evaluates the curvature there.
 *
 * # Safety
 * `surface` must be a live handle or null; `out` must be null or writable.
 */
enum ScherkStatus scherk_surface_curvature(const struct ScherkSurface *surface,
                                           struct ScherkCurvature *out);

/**
 * Writes the triangle mesh of the surface to the UTF-8 path `path`.
 *
 * # Safety
 * `surface` must be a live handle or null; `path` must be null or a NUL-terminated string.
 */
enum ScherkStatus scherk_write_mesh(const struct ScherkSurface *surface,
                                    size_t n_r,
                                    size_t n_t,
                                    double r_max,
                                    const char *path);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHERK_H */
