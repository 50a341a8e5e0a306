#ifndef ORBITLAB_H
#define ORBITLAB_H

/*
 * C interface to orbitlab.
 *
 * Every fallible call returns an orbitlab_status; on failure a description
 * is available from orbitlab_last_error() on the same thread until the next
 * call into the library. Results come back through opaque handles that the
 * caller releases with the matching *_free function. Counts are exact and
 * are handed out as NUL-terminated decimal strings owned by their handle.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(ORBITLAB_BUILDING_LIBRARY)
#define ORBITLAB_API __attribute__((visibility("default")))
#else
#define ORBITLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orbitlab_status {
  ORBITLAB_OK = 0,
  ORBITLAB_ERR_INVALID_ARGUMENT = 1,
  ORBITLAB_ERR_NOT_PRIME = 2,
  ORBITLAB_ERR_INCOMPATIBLE = 3,
  ORBITLAB_ERR_BUDGET = 4,
  ORBITLAB_ERR_ARITHMETIC = 5,
  ORBITLAB_ERR_INTERNAL = 6
} orbitlab_status;

typedef enum orbitlab_method {
  ORBITLAB_METHOD_BFS = 0,
  ORBITLAB_METHOD_CANONICAL = 1,
  ORBITLAB_METHOD_BURNSIDE = 2,
  ORBITLAB_METHOD_FORMULA = 3
} orbitlab_method;

ORBITLAB_API const char* orbitlab_version(void);
ORBITLAB_API const char* orbitlab_status_name(orbitlab_status status);
ORBITLAB_API const char* orbitlab_last_error(void);
ORBITLAB_API uint64_t orbitlab_default_budget(void);

/* An owned decimal string or message. */
typedef struct orbitlab_text orbitlab_text;
ORBITLAB_API const char* orbitlab_text_str(const orbitlab_text* text);
ORBITLAB_API void orbitlab_text_free(orbitlab_text* text);

/* ---- orbit census over Z_p^n ------------------------------------------ */

typedef struct orbitlab_census orbitlab_census;

/*
 * Counts orbits of Z_p^n x Z_p^n. BFS accepts any modulus p >= 2; the other
 * methods need p prime. with_summaries is honoured by the BFS method only.
 * threads applies to the canonical method (0 = hardware concurrency).
 */
ORBITLAB_API orbitlab_status orbitlab_census_run(uint32_t p, uint32_t n,
                                                 orbitlab_method method,
                                                 int with_summaries, uint64_t budget,
                                                 unsigned threads,
                                                 orbitlab_census** out);
ORBITLAB_API const char* orbitlab_census_count(const orbitlab_census* census);
ORBITLAB_API size_t orbitlab_census_summary_count(const orbitlab_census* census);
/* *stabilizer is set to NULL when the modulus is not prime. */
ORBITLAB_API orbitlab_status orbitlab_census_summary(const orbitlab_census* census,
                                                     size_t i,
                                                     const char** representative,
                                                     const char** size,
                                                     const char** stabilizer);
ORBITLAB_API void orbitlab_census_free(orbitlab_census* census);

/* ---- closed forms ------------------------------------------------------ */

ORBITLAB_API orbitlab_status orbitlab_r_formula(uint32_t p, int64_t n,
                                                orbitlab_text** out);
ORBITLAB_API orbitlab_status orbitlab_f_closed(uint32_t p, int64_t n,
                                               orbitlab_text** out);

typedef struct orbitlab_sequence orbitlab_sequence;

ORBITLAB_API orbitlab_status orbitlab_sequence_run(uint32_t p, int64_t n_max,
                                                   orbitlab_sequence** out);
ORBITLAB_API size_t orbitlab_sequence_length(const orbitlab_sequence* seq);
/* Value of r(p, n) for 0 <= n < length, or NULL when out of range. */
ORBITLAB_API const char* orbitlab_sequence_value(const orbitlab_sequence* seq, size_t n);
ORBITLAB_API void orbitlab_sequence_free(orbitlab_sequence* seq);

/* ---- restricted-growth words ------------------------------------------ */

/* Returns nonzero to stop the walk early. */
typedef int (*orbitlab_word_visitor)(const char* word, void* user);

ORBITLAB_API orbitlab_status orbitlab_words_count(uint32_t m, orbitlab_text** out);
ORBITLAB_API orbitlab_status orbitlab_words_for_each(uint32_t m, uint64_t budget,
                                                     orbitlab_word_visitor visit,
                                                     void* user);
/* ORBITLAB_OK for a valid word; otherwise INVALID_ARGUMENT and
 * orbitlab_last_error() names the first violated constraint. */
ORBITLAB_API orbitlab_status orbitlab_word_check(const char* word);

/* ---- encoding map ------------------------------------------------------ */

typedef struct orbitlab_encoding orbitlab_encoding;

ORBITLAB_API orbitlab_status orbitlab_encode_word(const char* word,
                                                  orbitlab_encoding** out);
ORBITLAB_API size_t orbitlab_encoding_row_count(const orbitlab_encoding* enc);
/* Two-character bit string "gk" for row i, or NULL when out of range. */
ORBITLAB_API const char* orbitlab_encoding_row(const orbitlab_encoding* enc, size_t i);
ORBITLAB_API const char* orbitlab_encoding_canonical(const orbitlab_encoding* enc);
ORBITLAB_API const char* orbitlab_encoding_orbit_size(const orbitlab_encoding* enc);
ORBITLAB_API void orbitlab_encoding_free(orbitlab_encoding* enc);

typedef struct orbitlab_bridge orbitlab_bridge;

ORBITLAB_API orbitlab_status orbitlab_bridge_verify(uint32_t m, uint64_t budget,
                                                    orbitlab_bridge** out);
ORBITLAB_API const char* orbitlab_bridge_word_count(const orbitlab_bridge* br);
ORBITLAB_API const char* orbitlab_bridge_orbit_count(const orbitlab_bridge* br);
ORBITLAB_API int orbitlab_bridge_injective(const orbitlab_bridge* br);
ORBITLAB_API int orbitlab_bridge_surjective(const orbitlab_bridge* br);
ORBITLAB_API size_t orbitlab_bridge_collision_count(const orbitlab_bridge* br);
ORBITLAB_API orbitlab_status orbitlab_bridge_collision(const orbitlab_bridge* br, size_t i,
                                                       const char** first,
                                                       const char** second);
ORBITLAB_API size_t orbitlab_bridge_missed_count(const orbitlab_bridge* br);
ORBITLAB_API const char* orbitlab_bridge_missed(const orbitlab_bridge* br, size_t i);
ORBITLAB_API void orbitlab_bridge_free(orbitlab_bridge* br);

#ifdef __cplusplus
}
#endif

#endif /* ORBITLAB_H */
