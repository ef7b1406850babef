#ifndef FSK_H
#define FSK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FskMode {
  FSK_MODE_DIRECT = 0,
  FSK_MODE_VIA_FACTOR = 1,
  FSK_MODE_VIA_SEARCH = 2,
} FskMode;

typedef enum FskStatus {
  FSK_STATUS_OK = 0,
  FSK_STATUS_NULL_ARGUMENT = 1,
  FSK_STATUS_INVALID_UTF8 = 2,
  FSK_STATUS_PARSE = 3,
  /**
   * Well-formed input violating a mathematical condition: a bad map,
   * lbf or object, a map that is not a morphism, mismatched sizes.
   */
  FSK_STATUS_INVALID = 4,
  FSK_STATUS_PRECONDITION = 5,
  FSK_STATUS_BUFFER_TOO_SMALL = 6,
  FSK_STATUS_INTERNAL = 7,
  FSK_STATUS_PANIC = 8,
} FskStatus;

typedef struct FskLbfHandle FskLbfHandle;

typedef struct FskMorphismHandle FskMorphismHandle;

typedef struct FskObjectHandle FskObjectHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failure on this thread, or null. Owned by the
 * library; valid until the next call.
 */
const char *fsk_last_error(void);

void fsk_string_free(char *s);

/**
 * Parses `0,1,0,3`.
 */
enum FskStatus fsk_lbf_parse(const char *values, struct FskLbfHandle **result);

void fsk_lbf_free(struct FskLbfHandle *lbf);

enum FskStatus fsk_lbf_to_string(const struct FskLbfHandle *lbf, char **result);

enum FskStatus fsk_lbf_join(const struct FskLbfHandle *a,
                            const struct FskLbfHandle *b,
                            struct FskLbfHandle **result);

enum FskStatus fsk_lbf_meet(const struct FskLbfHandle *a,
                            const struct FskLbfHandle *b,
                            struct FskLbfHandle **result);

enum FskStatus fsk_lbf_leq(const struct FskLbfHandle *a,
                           const struct FskLbfHandle *b,
                           bool *result);

/**
 * `|Tam_m|`.
 */
enum FskStatus fsk_tamari_count(uintptr_t m, uintptr_t *result);

/**
 * Parses a word such as `((I X) X)`.
 */
enum FskStatus fsk_object_parse(const char *word, struct FskObjectHandle **result);

void fsk_object_free(struct FskObjectHandle *o);

enum FskStatus fsk_object_to_string(const struct FskObjectHandle *o, char **result);

/**
 * `{"m":..,"u":[..],"s":[..]}`.
 */
enum FskStatus fsk_object_to_json(const struct FskObjectHandle *o, char **result);

/**
 * Number of leaves.
 */
enum FskStatus fsk_object_size(const struct FskObjectHandle *o, uintptr_t *result);

/**
 * Number of `X` leaves.
 */
enum FskStatus fsk_object_grade(const struct FskObjectHandle *o, uintptr_t *result);

enum FskStatus fsk_object_tensor(const struct FskObjectHandle *a,
                                 const struct FskObjectHandle *b,
                                 struct FskObjectHandle **result);

/**
 * Whether `images[0..len]` underlies a morphism `src -> dst`.
 */
enum FskStatus fsk_is_morphism(const struct FskObjectHandle *src,
                               const struct FskObjectHandle *dst,
                               const uintptr_t *images,
                               uintptr_t len,
                               enum FskMode mode,
                               bool *result);

/**
 * Fails with `FSK_STATUS_INVALID` if the map is not a morphism.
 */
enum FskStatus fsk_morphism_new(const struct FskObjectHandle *src,
                                const struct FskObjectHandle *dst,
                                const uintptr_t *images,
                                uintptr_t len,
                                struct FskMorphismHandle **result);

void fsk_morphism_free(struct FskMorphismHandle *f);

/**
 * `SRC -> DST ; IMAGES`.
 */
enum FskStatus fsk_morphism_to_string(const struct FskMorphismHandle *f, char **result);

enum FskStatus fsk_morphism_to_json(const struct FskMorphismHandle *f, char **result);

/**
 * Copies the underlying map into `buffer`. `len` receives the number of
 * images even when `capacity` is too small.
 */
enum FskStatus fsk_morphism_images(const struct FskMorphismHandle *f,
                                   uintptr_t *buffer,
                                   uintptr_t capacity,
                                   uintptr_t *len);

enum FskStatus fsk_morphism_equal(const struct FskMorphismHandle *f,
                                  const struct FskMorphismHandle *g,
                                  bool *result);

/**
 * `g ∘ f`.
 */
enum FskStatus fsk_morphism_compose(const struct FskMorphismHandle *g,
                                    const struct FskMorphismHandle *f,
                                    struct FskMorphismHandle **result);

enum FskStatus fsk_morphism_tensor(const struct FskMorphismHandle *f,
                                   const struct FskMorphismHandle *g,
                                   struct FskMorphismHandle **result);

enum FskStatus fsk_hom_count(const struct FskObjectHandle *src,
                             const struct FskObjectHandle *dst,
                             uintptr_t *result);

enum FskStatus fsk_alpha(const struct FskObjectHandle *a,
                         const struct FskObjectHandle *b,
                         const struct FskObjectHandle *c,
                         struct FskMorphismHandle **result);

enum FskStatus fsk_lambda(const struct FskObjectHandle *a, struct FskMorphismHandle **result);

enum FskStatus fsk_rho(const struct FskObjectHandle *a, struct FskMorphismHandle **result);

/**
 * The counit `H Q a -> a`.
 */
enum FskStatus fsk_counit(const struct FskObjectHandle *a, struct FskMorphismHandle **result);

/**
 * `H(x ∘_i y) -> H(x) ∘_i H(y)`, elements written `t3` or `l0`, `i`
 * 1-based.
 */
enum FskStatus fsk_h_colax(const char *x,
                           uintptr_t i,
                           const char *y,
                           struct FskMorphismHandle **result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FSK_H */
