#ifndef STEENROD_HARMONICS_H
#define STEENROD_HARMONICS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum SteenrodStatus {
  STEENROD_STATUS_OK = 0,
  STEENROD_STATUS_NULL_POINTER = 1,
  STEENROD_STATUS_INVALID_UTF8 = 2,
  STEENROD_STATUS_PARSE = 3,
  STEENROD_STATUS_INVALID_ARGUMENT = 4,
  STEENROD_STATUS_OUT_OF_RANGE = 5,
  STEENROD_STATUS_COMPUTATION = 6,
  STEENROD_STATUS_PANIC = 7,
} SteenrodStatus;

// An operator family over the rationals or over rational functions in q.
typedef struct SteenrodFamily SteenrodFamily;

// The solved harmonic space of a family, degree by degree.
typedef struct SteenrodKernel SteenrodKernel;

// The result of one experiment.
typedef struct SteenrodReport SteenrodReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *steenrod_last_error(void);

// Library version as a static string.
const char *steenrod_version(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void steenrod_string_free(char *s);

// Build a family on `n` variables. `kind` is one of `classical`,
// `q-steenrod`, `tilde` or `hat`; `q` is a rational such as `"3/2"` or
// `"symbolic"` and is only read for `q-steenrod` (null means symbolic).
//
// # Safety
// String arguments must be null or NUL-terminated; `out` must be writable.
enum SteenrodStatus steenrod_family_new(const char *kind,
                                        size_t n,
                                        const char *q,
                                        struct SteenrodFamily **out);

// Build `D_k = sum_i a_i x_i d_i^{k+1} + b_i d_i^k` from comma-separated
// rationals of equal length.
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum SteenrodStatus steenrod_family_general(const char *a,
                                            const char *b,
                                            struct SteenrodFamily **out);

// Number of variables of a family, or 0 for null.
//
// # Safety
// `family` must be null or a live handle.
size_t steenrod_family_n_vars(const struct SteenrodFamily *family);

// Release a family. Null is ignored.
//
// # Safety
// `family` must be null or a live handle not used afterwards.
void steenrod_family_free(struct SteenrodFamily *family);

// Solve the harmonic space in degrees `0..=degree_cap`. When
// `two_generators` is nonzero only `D_1` and `D_2` are imposed, which is
// exact for q-Steenrod (q nonzero) and tilde families.
//
// # Safety
// `family` must be a live handle; `out` must be writable.
enum SteenrodStatus steenrod_kernel_solve(const struct SteenrodFamily *family,
                                          size_t degree_cap,
                                          bool two_generators,
                                          struct SteenrodKernel **out);

// Number of Hilbert coefficients (the degree cap plus one), or 0 for null.
//
// # Safety
// `kernel` must be null or a live handle.
size_t steenrod_kernel_len(const struct SteenrodKernel *kernel);

// Copy up to `len` Hilbert coefficients into `buf`; the number available is
// written to `written` when it is not null.
//
// # Safety
// `kernel` must be a live handle and `buf` must hold `len` entries.
enum SteenrodStatus steenrod_kernel_hilbert(const struct SteenrodKernel *kernel,
                                            size_t *buf,
                                            size_t len,
                                            size_t *written);

// Render basis element `index` of degree `degree` as a new string.
//
// # Safety
// `kernel` must be a live handle; `out` must be writable. The string must be
// released with [`steenrod_string_free`].
enum SteenrodStatus steenrod_kernel_basis_element(const struct SteenrodKernel *kernel,
                                                  size_t degree,
                                                  size_t index,
                                                  char **out);

// Release a kernel. Null is ignored.
//
// # Safety
// `kernel` must be null or a live handle not used afterwards.
void steenrod_kernel_free(struct SteenrodKernel *kernel);

// Whether the weighted power sums with coefficients `a` (comma-separated
// rationals) form a regular sequence, i.e. no nonempty subset of `a` sums
// to zero.
//
// # Safety
// `a` must be NUL-terminated; `out` must be writable.
enum SteenrodStatus steenrod_is_regular(const char *a, bool *out);

// Run a named experiment (`hilbert`, `frobenius`, `tilde-decomp`,
// `q-layers`, `coeff-equality`, `psi-basis`, `garnir-bound`, `regseq`,
// `diagonal`, `wood-basis`). Null strings take the command-line defaults;
// a negative `cap` means the default cap.
//
// # Safety
// String arguments must be null or NUL-terminated; `out` must be writable.
enum SteenrodStatus steenrod_experiment_run(const char *command,
                                            size_t n,
                                            const char *family,
                                            const char *q,
                                            const char *a,
                                            const char *b,
                                            size_t k,
                                            int64_t cap,
                                            uint64_t seed,
                                            struct SteenrodReport **out);

// Whether every check in the report passed; false for null.
//
// # Safety
// `report` must be null or a live handle.
bool steenrod_report_passed(const struct SteenrodReport *report);

// Render a report as `text`, `json` or `csv` into a new string.
//
// # Safety
// `report` must be a live handle; `format` null or NUL-terminated; `out`
// writable. The string must be released with [`steenrod_string_free`].
enum SteenrodStatus steenrod_report_render(const struct SteenrodReport *report,
                                           const char *format,
                                           char **out);

// Release a report. Null is ignored.
//
// # Safety
// `report` must be null or a live handle not used afterwards.
void steenrod_report_free(struct SteenrodReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STEENROD_HARMONICS_H */
