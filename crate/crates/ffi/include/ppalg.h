#ifndef PPALG_H
#define PPALG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call.
typedef enum PpalgStatus {
  PPALG_STATUS_OK = 0,
  PPALG_STATUS_NULL_POINTER = 1,
  PPALG_STATUS_INVALID_UTF8 = 2,
  // Malformed or inconsistent input.
  PPALG_STATUS_INVALID_INPUT = 3,
  // A cap, truncation or search bound was hit.
  PPALG_STATUS_LIMIT_EXCEEDED = 4,
  // An internal consistency check failed.
  PPALG_STATUS_INTERNAL = 5,
  // The caller's buffer is shorter than the result.
  PPALG_STATUS_BUFFER_TOO_SMALL = 6,
  PPALG_STATUS_PANIC = 7,
} PpalgStatus;

// Opaque quiver handle.
typedef struct PpalgQuiver PpalgQuiver;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next call into this library on the same thread.
const char *ppalg_last_error_message(void);

// Parse a quiver from its JSON form.
//
// # Safety
// `json` must be a valid nul-terminated string and `out` a valid pointer.
enum PpalgStatus ppalg_quiver_from_json(const char *json, struct PpalgQuiver **out);

// Release a quiver handle; null is ignored.
//
// # Safety
// `q` must come from [`ppalg_quiver_from_json`] and not be used afterwards.
void ppalg_quiver_free(struct PpalgQuiver *q);

// Number of vertices; dimension vectors passed to this library have this length.
//
// # Safety
// `q` must be a live handle and `out` a valid pointer.
enum PpalgStatus ppalg_quiver_num_vertices(const struct PpalgQuiver *q, size_t *out);

// `{"kind": ..., "label": ...}` as a newly allocated string.
//
// # Safety
// `q` must be a live handle and `out_json` a valid pointer.
enum PpalgStatus ppalg_classify(const struct PpalgQuiver *q, char **out_json);

// Dimensions of the preprojective algebra in degrees `0..=max_degree`,
// written to `buf` (capacity `cap`). `written` receives the number of
// entries needed, also when the buffer is too small.
//
// # Safety
// `q` must be a live handle, `buf` valid for `cap` writes, `written` valid.
enum PpalgStatus ppalg_hilbert(const struct PpalgQuiver *q,
                               size_t max_degree,
                               size_t *buf,
                               size_t cap,
                               size_t *written);

// Multiplicity of the weight `omega_w - alpha_v` (finite type only).
//
// # Safety
// `q` must be a live handle; `w` and `v` must each hold `num_vertices` entries.
enum PpalgStatus ppalg_weight_multiplicity(const struct PpalgQuiver *q,
                                           const size_t *w,
                                           const size_t *v,
                                           uint64_t *out);

// Point counts of `Gr(v, q^w)` at the given primes with their interpolating
// polynomial, as JSON. `trunc = 0` means the default truncation.
//
// # Safety
// `q` must be a live handle; `w`, `v` hold `num_vertices` entries; `primes`
// holds `num_primes` entries; `out_json` is a valid pointer.
enum PpalgStatus ppalg_count_json(const struct PpalgQuiver *q,
                                  const size_t *w,
                                  const size_t *v,
                                  const uint64_t *primes,
                                  size_t num_primes,
                                  size_t trunc,
                                  char **out_json);

// Release a string returned by this library; null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void ppalg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PPALG_H */
