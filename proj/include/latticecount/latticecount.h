/*
 * latticecount C API.
 *
 * Opaque handles own their data and are released with the matching *_free
 * function. Strings returned through char** out-parameters are heap
 * allocated and released with lc_string_free. Every function that can fail
 * returns an lc_status; on failure lc_last_error() describes the problem for
 * the calling thread until its next failing call.
 */
#ifndef LATTICECOUNT_H
#define LATTICECOUNT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LATTICECOUNT_BUILDING)
#    define LC_API __declspec(dllexport)
#  else
#    define LC_API __declspec(dllimport)
#  endif
#else
#  define LC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
    LC_OK = 0,
    LC_ERR_EMPTY_PATTERN = 1,
    LC_ERR_BAD_CHAR = 2,
    LC_ERR_DEPTH_NONZERO = 3,
    LC_ERR_PATTERN_TOO_SHORT = 4,
    LC_ERR_CAP_EXCEEDED = 5,
    LC_ERR_TRUNCATION_TOO_LOW = 6,
    LC_ERR_INVALID_ARGUMENT = 7,
    LC_ERR_BAD_DOCUMENT = 8,
    LC_ERR_DEFECT = 9, /* internal consistency failure */
    LC_ERR_NULL_POINTER = 10,
    LC_ERR_OUT_OF_MEMORY = 11
} lc_status;

typedef enum lc_engine {
    LC_ENGINE_RECURRENCE = 0,
    LC_ENGINE_AUTOMATON = 1,
    LC_ENGINE_FOCALC = 2,
    LC_ENGINE_DFS = 3
} lc_engine;

typedef enum lc_format { LC_FORMAT_TEXT = 0, LC_FORMAT_CSV = 1, LC_FORMAT_JSON = 2 } lc_format;

typedef enum lc_poly_kind { LC_POLY_BASIC = 0, LC_POLY_SHEFFER = 1 } lc_poly_kind;

typedef struct lc_pattern lc_pattern;
typedef struct lc_table lc_table;
typedef struct lc_polys lc_polys;
typedef struct lc_report lc_report;

typedef struct lc_pattern_info {
    long r_count;
    long u_count;
    long depth;
    int depth_zero;
    size_t bifix_count;
} lc_pattern_info;

LC_API const char* lc_version(void);
LC_API const char* lc_status_name(lc_status status);
LC_API const char* lc_last_error(void);
/* Index of the offending character after LC_ERR_BAD_CHAR, otherwise -1. */
LC_API long lc_last_error_position(void);
LC_API void lc_string_free(char* s);

/* Patterns */
LC_API lc_status lc_pattern_parse(const char* text, lc_pattern** out);
LC_API void lc_pattern_free(lc_pattern* pattern);
LC_API lc_status lc_pattern_string(const lc_pattern* pattern, char** out);
LC_API lc_status lc_pattern_info_get(const lc_pattern* pattern, lc_pattern_info* out);
/* Bifixes are ordered by increasing length. */
LC_API lc_status lc_pattern_bifix(const lc_pattern* pattern, size_t index, char** bifix, long* trunc_r,
                                  long* trunc_u);
LC_API lc_status lc_analyze_render(const lc_pattern* pattern, lc_format format, char** out);

/* Tables of s_n(m), 0 <= n <= max_n, 0 <= m <= max_m */
LC_API lc_status lc_table_create(const lc_pattern* pattern, lc_engine engine, long max_n, long max_m,
                                 lc_table** out);
LC_API void lc_table_free(lc_table* table);
LC_API lc_status lc_table_bounds(const lc_table* table, long* max_n, long* max_m);
/* Decimal string; LC_ERR_INVALID_ARGUMENT outside the table or below m = n - 1. */
LC_API lc_status lc_table_cell(const lc_table* table, long n, long m, char** out);
LC_API lc_status lc_table_render(const lc_table* table, lc_format format, char** out);
/* Parses a JSON table document back into a handle. */
LC_API lc_status lc_table_parse_json(const char* json, lc_table** out);
/* 1 when both tables hold the same pattern, bounds and cells. */
LC_API int lc_table_equal(const lc_table* lhs, const lc_table* rhs);

/* Dyck counts s_0(0) .. s_n(n) */
LC_API lc_status lc_dyck_render(const lc_pattern* pattern, lc_engine engine, long n, lc_format format, char** out);

/* Basic or Sheffer polynomials of index 0 .. n */
LC_API lc_status lc_polys_create(const lc_pattern* pattern, lc_poly_kind kind, long n, lc_polys** out);
LC_API void lc_polys_free(lc_polys* polys);
LC_API size_t lc_polys_count(const lc_polys* polys);
/* Evaluates polynomial `index` at the rational x ("7", "-1/2"); result as "p/q" or decimal. */
LC_API lc_status lc_polys_eval(const lc_polys* polys, size_t index, const char* x, char** out);
LC_API lc_status lc_polys_render(const lc_polys* polys, lc_format format, char** out);
LC_API lc_status lc_polys_parse_json(const char* json, lc_polys** out);

/* Full cross-engine verification */
LC_API lc_status lc_verify(const lc_pattern* pattern, long max_n, long max_m, lc_report** out);
LC_API void lc_report_free(lc_report* report);
LC_API int lc_report_passed(const lc_report* report);
LC_API size_t lc_report_check_count(const lc_report* report);
LC_API lc_status lc_report_render(const lc_report* report, lc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
