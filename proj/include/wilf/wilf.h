/*
 * C interface to the Wilf partition toolkit.
 *
 * Every object crosses the boundary as an opaque handle owned by the caller
 * and released with its matching *_free function. Functions that can fail
 * return a wilf_status; on failure, wilf_last_error() describes the problem
 * for the calling thread until its next failing call.
 */
#ifndef WILF_WILF_H
#define WILF_WILF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WILF_BUILDING_LIBRARY)
#    define WILF_API __declspec(dllexport)
#  else
#    define WILF_API __declspec(dllimport)
#  endif
#else
#  define WILF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wilf_status {
    WILF_OK = 0,
    WILF_ERR_INVALID_ARGUMENT = 1,
    WILF_ERR_PARSE = 2,               /* malformed / non-canonical partition input */
    WILF_ERR_NOT_WILF = 3,            /* involution on repeated multiplicities */
    WILF_ERR_NO_COVER = 4,            /* weight is in {2,3,7,11,15} */
    WILF_ERR_INFEASIBLE = 5,          /* family member does not fit the weight */
    WILF_ERR_LIMIT = 6,               /* feasibility guard exceeded */
    WILF_ERR_COVER_TOO_SHALLOW = 7,
    WILF_ERR_OVERFLOW = 8,
    WILF_ERR_INTEGRITY = 9,
    WILF_ERR_INTERNAL = 10
} wilf_status;

typedef struct wilf_text wilf_text;
typedef struct wilf_partition wilf_partition;
typedef struct wilf_partition_list wilf_partition_list;
typedef struct wilf_cover_set wilf_cover_set;
typedef struct wilf_family wilf_family;

WILF_API const char* wilf_version(void);
WILF_API const char* wilf_status_name(wilf_status status);
WILF_API const char* wilf_last_error(void);

/* Text results. The data is NUL-terminated; size excludes the terminator. */
WILF_API const char* wilf_text_data(const wilf_text* text);
WILF_API size_t wilf_text_size(const wilf_text* text);
WILF_API void wilf_text_free(wilf_text* text);

/* ---- partitions ------------------------------------------------------- */

/* "6^1+4^2+3^3" form; "" is the empty partition. */
WILF_API wilf_status wilf_partition_parse(const char* text, wilf_partition** out);
/* [[6,1],[4,2],[3,3]] form. */
WILF_API wilf_status wilf_partition_parse_json(const char* json, wilf_partition** out);
/* Any order; duplicate parts are rejected, not merged. */
WILF_API wilf_status wilf_partition_from_terms(const uint64_t* parts, const uint64_t* multiplicities, size_t count,
                                               wilf_partition** out);
WILF_API wilf_partition* wilf_partition_clone(const wilf_partition* p);
WILF_API void wilf_partition_free(wilf_partition* p);

WILF_API size_t wilf_partition_term_count(const wilf_partition* p);
WILF_API wilf_status wilf_partition_term(const wilf_partition* p, size_t index, uint64_t* part, uint64_t* multiplicity);
WILF_API wilf_status wilf_partition_weight(const wilf_partition* p, uint64_t* out);
WILF_API int wilf_partition_is_wilf(const wilf_partition* p);
WILF_API int wilf_partition_is_fixed_point(const wilf_partition* p);
WILF_API int wilf_partition_equal(const wilf_partition* a, const wilf_partition* b);
WILF_API wilf_status wilf_partition_involute(const wilf_partition* p, wilf_partition** out);
WILF_API wilf_status wilf_partition_to_text(const wilf_partition* p, wilf_text** out);
WILF_API wilf_status wilf_partition_to_json(const wilf_partition* p, wilf_text** out);

/* ---- counting and enumeration ----------------------------------------- */

typedef enum wilf_count_kind {
    WILF_COUNT_WILF = 0,         /* f(n) */
    WILF_COUNT_FIXED = 1,        /* F(n) */
    WILF_COUNT_FIXED_ORACLE = 2  /* F(n) by filtering Wilf partitions */
} wilf_count_kind;

typedef enum wilf_enum_mode {
    WILF_ENUM_ALL = 0,
    WILF_ENUM_WILF = 1,
    WILF_ENUM_FIXED = 2
} wilf_enum_mode;

/* limit == 0 selects the default guard (200 for f, 400 for F, 45 for the oracle).
 * The count is written as a decimal string. */
WILF_API wilf_status wilf_count(wilf_count_kind kind, uint64_t n, uint64_t limit, wilf_text** out);
/* limit == 0 selects the default guard; WILF_ENUM_ALL and WILF_ENUM_WILF use the f guard. */
WILF_API wilf_status wilf_enumerate(wilf_enum_mode mode, uint64_t n, uint64_t limit, wilf_partition_list** out);
WILF_API size_t wilf_partition_list_size(const wilf_partition_list* list);
/* Borrowed; valid until the list is freed. NULL when out of range. */
WILF_API const wilf_partition* wilf_partition_list_get(const wilf_partition_list* list, size_t index);
WILF_API void wilf_partition_list_free(wilf_partition_list* list);
WILF_API uint64_t wilf_max_distinct_parts(uint64_t n);

/* ---- cover set -------------------------------------------------------- */

WILF_API wilf_status wilf_cover_set_build(size_t depth, wilf_cover_set** out);
WILF_API wilf_status wilf_cover_set_for_weight(uint64_t n, wilf_cover_set** out);
WILF_API void wilf_cover_set_free(wilf_cover_set* cs);
WILF_API size_t wilf_cover_set_depth(const wilf_cover_set* cs);
/* 1-based k. */
WILF_API wilf_status wilf_cover_set_a(const wilf_cover_set* cs, size_t k, uint64_t* out);
/* 10 <= k <= depth. */
WILF_API wilf_status wilf_cover_set_b(const wilf_cover_set* cs, size_t k, uint64_t* out);
WILF_API wilf_status wilf_cover_is_member(const wilf_cover_set* cs, uint64_t x, int* out);
/* Writes t values into out. */
WILF_API wilf_status wilf_cover_smallest_non_members(const wilf_cover_set* cs, size_t t, uint64_t* out);
/* cs may be NULL, in which case a deep enough set is built internally.
 * Returns WILF_ERR_NO_COVER for the exception set. */
WILF_API wilf_status wilf_fixed_point_cover(const wilf_cover_set* cs, uint64_t n, wilf_partition** out);
/* 1 if every part and multiplicity of p is a member of cs. */
WILF_API int wilf_cover_labels_in_set(const wilf_cover_set* cs, const wilf_partition* p);

/* ---- lower-bound family ----------------------------------------------- */

WILF_API wilf_status wilf_compute_r(uint64_t n, uint64_t k, uint64_t* out);
WILF_API uint64_t wilf_log_preset_k(uint64_t n);
/* K ln(R!) with R from wilf_compute_r. */
WILF_API wilf_status wilf_family_log_size(uint64_t n, uint64_t k, double* out);

typedef struct wilf_family_options {
    uint64_t n;
    uint64_t k;
    uint64_t r_override;   /* 0: use wilf_compute_r */
    const uint64_t* xs;    /* NULL: the 2RK smallest labels outside the cover set */
    size_t xs_count;
    uint64_t seed;
} wilf_family_options;

WILF_API wilf_status wilf_family_create(const wilf_family_options* options, wilf_family** out);
WILF_API void wilf_family_free(wilf_family* family);
WILF_API uint64_t wilf_family_r(const wilf_family* family);
WILF_API uint64_t wilf_family_k(const wilf_family* family);
/* K ln(R!) for this family's R. */
WILF_API double wilf_family_log_size_of(const wilf_family* family);
/* Draws the next K permutations from the seeded sampler and builds that
 * member. Returns WILF_ERR_INFEASIBLE (with *mass still set when non-NULL)
 * when the paired labels outweigh n or leave an uncoverable residual. */
WILF_API wilf_status wilf_family_next(wilf_family* family, wilf_partition** out, uint64_t* mass);

/* ---- auxiliary quantities and reports ---------------------------------- */

WILF_API wilf_status wilf_asymptotic_log_f(uint64_t n, double* out);
WILF_API wilf_status wilf_asymptotic_log_F(uint64_t n, double* out);
WILF_API wilf_status wilf_q_distinct_squares(uint64_t k, wilf_text** out);
WILF_API wilf_status wilf_divisor_count(uint64_t x, uint64_t* out);
WILF_API wilf_status wilf_partitions_into_parts(uint64_t m, uint64_t r, wilf_text** out);
WILF_API wilf_status wilf_involution_count(uint64_t n, wilf_text** out);
WILF_API double wilf_meinardus_constant(void);
WILF_API wilf_status wilf_upper_bound_F(uint64_t n, double* out);

typedef enum wilf_report_format {
    WILF_REPORT_CSV = 0,
    WILF_REPORT_JSON = 1
} wilf_report_format;

#define WILF_DEFAULT_WILF_LIMIT 200
#define WILF_DEFAULT_FIXED_LIMIT 400

/* Columns n,f_exact,F_exact,ln_F,estimate_f,estimate_F,ratio. The exact f and
 * F columns are filled for n up to the respective limit; a limit of 0 leaves
 * that column empty. */
WILF_API wilf_status wilf_report(const uint64_t* n_values, size_t count, wilf_report_format format,
                                 uint64_t wilf_limit, uint64_t fixed_limit, wilf_text** out);

#ifdef __cplusplus
}
#endif

#endif
