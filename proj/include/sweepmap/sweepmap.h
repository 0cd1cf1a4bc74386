/* C interface to the sweepmap library.
 *
 * Objects are opaque handles created by sm_*_create / returned through out
 * parameters and released with the matching sm_*_free. Every fallible call
 * returns an sm_status; on failure, sm_last_error() holds a message for the
 * calling thread that starts with the status token (e.g. "BELOW_ZERO(1): ...").
 *
 * Strings returned by accessors are owned by their handle and stay valid
 * until it is freed. Paths are spelled over {N,E}, sweep words over {S,W}.
 */
#ifndef SWEEPMAP_H_
#define SWEEPMAP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SWEEPMAP_API __declspec(dllexport)
#else
#define SWEEPMAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_WRONG_LENGTH,
  SM_WRONG_COUNTS,
  SM_BELOW_ZERO,
  SM_INVALID_LETTER,
  SM_N_TOO_SMALL,
  SM_INVALID_SIGMA,
  SM_INVALID_RANKS,
  SM_STUCK_ZERO_DIFFERENCE,
  SM_BLOCK_OVERRUN,
  SM_NO_ENTRY_AT_LEVEL,
  SM_RESULT_NOT_DYCK,
  SM_BUDGET_EXCEEDED,
  SM_INVALID_ARGUMENT, /* null handle or out pointer */
  SM_OUT_OF_RANGE,     /* index past the end of a list */
  SM_INTERNAL
} sm_status;

typedef enum sm_direction {
  SM_RIGHT_TO_LEFT = 0,
  SM_LEFT_TO_RIGHT = 1
} sm_direction;

typedef struct sm_path sm_path;
typedef struct sm_swept sm_swept;
typedef struct sm_enumerator sm_enumerator;
typedef struct sm_report sm_report;
typedef struct sm_census sm_census;
typedef struct sm_word_list sm_word_list;

SWEEPMAP_API const char* sm_status_token(sm_status status);
SWEEPMAP_API const char* sm_last_error(void);
/* 1-based position attached to the last error, 0 if none. */
SWEEPMAP_API size_t sm_last_error_position(void);
SWEEPMAP_API const char* sm_version(void);

/* Paths */
SWEEPMAP_API sm_status sm_path_create(int n, const char* word, sm_path** out);
SWEEPMAP_API sm_status sm_path_sawtooth(int n, sm_path** out);
SWEEPMAP_API sm_status sm_path_staircase(int n, sm_path** out);
SWEEPMAP_API sm_status sm_path_collision_witness_a(int n, sm_path** out);
SWEEPMAP_API sm_status sm_path_collision_witness_b(int n, sm_path** out);
SWEEPMAP_API void sm_path_free(sm_path* path);
SWEEPMAP_API int sm_path_n(const sm_path* path);
SWEEPMAP_API const char* sm_path_word(const sm_path* path);
/* Copies min(cap, 3n+1) levels; *len receives 3n+1. */
SWEEPMAP_API sm_status sm_path_levels(const sm_path* path, int64_t* out,
                                      size_t cap, size_t* len);
/* Letters (as 'S'/'W') and start levels of each step, path order. */
SWEEPMAP_API sm_status sm_path_labels(const sm_path* path, char* letters,
                                      int64_t* levels, size_t cap, size_t* len);
SWEEPMAP_API int64_t sm_path_max_level(const sm_path* path);
/* NUL-terminated ASCII drawing of the path on its lattice grid. */
SWEEPMAP_API sm_status sm_path_render(const sm_path* path, char** out);
SWEEPMAP_API void sm_string_free(char* s);

/* Enumeration, lexicographic with N < E. */
SWEEPMAP_API sm_status sm_enumerator_create(int n, sm_enumerator** out);
/* Sets *out to the next path (caller frees) or NULL when exhausted. */
SWEEPMAP_API sm_status sm_enumerator_next(sm_enumerator* it, sm_path** out);
SWEEPMAP_API void sm_enumerator_free(sm_enumerator* it);
SWEEPMAP_API uint64_t sm_path_count_closed_form(int n);

/* Sweep map */
SWEEPMAP_API sm_status sm_sweep(const sm_path* path, sm_direction direction,
                                sm_swept** out);
SWEEPMAP_API void sm_swept_free(sm_swept* swept);
SWEEPMAP_API int sm_swept_n(const sm_swept* swept);
SWEEPMAP_API const char* sm_swept_sigma(const sm_swept* swept);
SWEEPMAP_API sm_status sm_swept_tau(const sm_swept* swept, int64_t* out,
                                    size_t cap, size_t* len);
/* *pass is 1 or 0; up to cap violating 1-based positions go to out. */
SWEEPMAP_API sm_status sm_swept_check_inheritance(const sm_swept* swept,
                                                  int* pass, size_t* out,
                                                  size_t cap, size_t* len);

/* Inversion */
SWEEPMAP_API sm_status sm_recover_ranks(const char* sigma, int64_t* out,
                                        size_t cap, size_t* len);
SWEEPMAP_API sm_status sm_reconstruct_path(const char* sigma,
                                           const int64_t* tau, size_t len,
                                           sm_path** out);
SWEEPMAP_API sm_status sm_invert_sweep(const char* sigma, sm_path** out);

/* Oracle. budget <= 0 selects the default enumeration budget. */
SWEEPMAP_API int sm_default_budget(void);
SWEEPMAP_API sm_status sm_brute_force_invert(const char* sigma, int n,
                                             int budget, sm_word_list** out);
SWEEPMAP_API size_t sm_word_list_size(const sm_word_list* list);
SWEEPMAP_API const char* sm_word_list_at(const sm_word_list* list, size_t i);
SWEEPMAP_API void sm_word_list_free(sm_word_list* list);

/* workers == 0 uses the hardware concurrency. */
SWEEPMAP_API sm_status sm_verify(int n, int budget, unsigned workers,
                                 sm_report** out);
SWEEPMAP_API void sm_report_free(sm_report* report);
SWEEPMAP_API int sm_report_n(const sm_report* report);
SWEEPMAP_API uint64_t sm_report_path_count(const sm_report* report);
SWEEPMAP_API uint64_t sm_report_image_count(const sm_report* report);
SWEEPMAP_API int sm_report_injective(const sm_report* report);
SWEEPMAP_API int sm_report_roundtrip_ok(const sm_report* report);
SWEEPMAP_API int sm_report_inheritance_ok(const sm_report* report);
SWEEPMAP_API int sm_report_level_bounds_ok(const sm_report* report);
SWEEPMAP_API size_t sm_report_counterexample_count(const sm_report* report);
SWEEPMAP_API sm_status sm_report_counterexample(const sm_report* report,
                                                size_t i, const char** path,
                                                const char** kind);

SWEEPMAP_API sm_status sm_collision_census(int n, int budget, sm_census** out);
SWEEPMAP_API void sm_census_free(sm_census* census);
SWEEPMAP_API size_t sm_census_size(const sm_census* census);
SWEEPMAP_API const char* sm_census_sigma(const sm_census* census, size_t i);
SWEEPMAP_API size_t sm_census_preimage_count(const sm_census* census, size_t i);
SWEEPMAP_API const char* sm_census_preimage(const sm_census* census, size_t i,
                                            size_t j);

#ifdef __cplusplus
}
#endif

#endif /* SWEEPMAP_H_ */
