#ifndef SHOM_SHOM_H
#define SHOM_SHOM_H

/*
 * C interface to the shom engine. Objects are opaque handles built from JSON
 * documents; results come back as JSON strings owned by the caller and
 * released with shom_string_free. Every call returns a status code; on error
 * shom_last_error() holds a message for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SHOM_API __attribute__((visibility("default")))
#else
#define SHOM_API
#endif

typedef enum shom_status {
  SHOM_OK = 0,
  SHOM_INVALID_INPUT,
  SHOM_NON_ASSOCIATIVE,
  SHOM_NON_COMMUTATIVE,
  SHOM_BAD_UNIT,
  SHOM_NOT_PRIME_CHAR,
  SHOM_BACKEND_UNSUPPORTED,
  SHOM_NOT_PRIME,
  SHOM_RING_MISMATCH,
  SHOM_INVALID_MODULE,
  SHOM_NOT_R_LINEAR,
  SHOM_NOT_COMPOSABLE,
  SHOM_NOT_S_ISO,
  SHOM_NOT_S_EXACT,
  SHOM_MIDDLE_NOT_CERTIFIED,
  SHOM_DIVIDES_S,
  SHOM_UNSUPPORTED_PAIR,
  SHOM_UNKNOWN_THEOREM,
  SHOM_INTERNAL_INVARIANT_VIOLATION,
  SHOM_NULL_ARGUMENT,
  SHOM_INTERNAL_ERROR
} shom_status;

/* A finite F_p-algebra, the integers, or Z/m. */
typedef struct shom_ring shom_ring;
/* A multiplicative subset of a ring. */
typedef struct shom_multset shom_multset;
/* A module over a ring handle (action form or integer presentation). */
typedef struct shom_module shom_module;

typedef enum shom_dim_kind { SHOM_PROJECTIVE = 0, SHOM_INJECTIVE = 1 } shom_dim_kind;
typedef enum shom_cover_style { SHOM_MINIMAL = 0, SHOM_PLAIN = 1, SHOM_SEEDED_RANDOM = 2 } shom_cover_style;

SHOM_API const char* shom_version(void);
SHOM_API const char* shom_status_name(shom_status status);
/* Message of the last failed call on this thread, "" if none. */
SHOM_API const char* shom_last_error(void);
SHOM_API void shom_string_free(char* s);

SHOM_API shom_status shom_ring_from_json(const char* json, shom_ring** out);
SHOM_API void shom_ring_free(shom_ring* ring);
/* 1 for finite algebras, 0 for the integer backend. */
SHOM_API int shom_ring_is_finite(const shom_ring* ring);
SHOM_API shom_status shom_ring_to_json(const shom_ring* ring, char** out);

SHOM_API shom_status shom_multset_from_json(const shom_ring* ring, const char* json, shom_multset** out);
SHOM_API void shom_multset_free(shom_multset* s);
SHOM_API shom_status shom_multset_to_json(const shom_multset* s, char** out);

/* ring may be NULL for integer presentations, which name their own ring. */
SHOM_API shom_status shom_module_from_json(const shom_ring* ring, const char* json, shom_module** out);
SHOM_API void shom_module_free(shom_module* m);
SHOM_API shom_status shom_module_to_json(const shom_module* m, char** out);

SHOM_API shom_status shom_ext(const shom_module* m, const shom_module* n, size_t degree, char** out);
SHOM_API shom_status shom_spd(const shom_module* m, const shom_multset* s, size_t bound, char** out);
SHOM_API shom_status shom_sid(const shom_module* m, const shom_multset* s, size_t bound, char** out);
SHOM_API shom_status shom_sgldim(const shom_ring* ring, const shom_multset* s, size_t bound, size_t trials,
                                 uint64_t seed, char** out);
SHOM_API shom_status shom_ssemisimple(const shom_ring* ring, const shom_multset* s, char** out);
SHOM_API shom_status shom_storsion(const shom_module* m, const shom_multset* s, char** out);
SHOM_API shom_status shom_localprofile(const shom_module* m, shom_dim_kind kind, size_t bound, char** out);
/* m is a Z/a-module, s a multiplicative set of the integers. */
SHOM_API shom_status shom_factorcheck(const char* a, const shom_module* m, const shom_multset* s, size_t bound,
                                      char** out);
/* Free resolution as generator images (finite) or boundary matrices (integer). */
SHOM_API shom_status shom_resolve(const shom_module* m, size_t depth, shom_cover_style style, uint64_t seed,
                                  char** out);
/* Rebuilds an exported resolution and returns Ext^degree against n. */
SHOM_API shom_status shom_ext_from_resolution(const char* resolution_json, const shom_ring* ring,
                                              const shom_module* n, size_t degree, char** out);

/* id is a registry id or "all"; failures receives the total failure count. */
SHOM_API shom_status shom_verify(const char* id, uint64_t seed, size_t trials, size_t bound, char** out,
                                 size_t* failures);
/* Registry ids with statements and regimes, as a JSON array. */
SHOM_API shom_status shom_registry(char** out);
/* Mutation-testing hook: zeroes every connecting map while on. */
SHOM_API void shom_set_connecting_sabotage(int on);
/* Re-runs a counterexample dump; the result has "verdict" and "identical". */
SHOM_API shom_status shom_replay(const char* dump_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
