#ifndef STONEDUAL_H
#define STONEDUAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(STONEDUAL_BUILDING_LIBRARY)
#define SD_API __attribute__((visibility("default")))
#else
#define SD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_DOMAIN = 1,   /* input outside an operation's domain */
  SD_ERR_USAGE = 2,    /* bad arguments (null pointers, unknown names) */
  SD_ERR_PARSE = 3,    /* malformed literal or file */
  SD_ERR_LIMIT = 4,    /* size cap exceeded */
  SD_ERR_INTERNAL = 5, /* failed internal cross-check */
  SD_ERR_BUFFER = 6    /* allocation failure */
} sd_status;

typedef struct sd_table sd_table;
typedef struct sd_graph sd_graph;

/* Strings returned through char** are malloc'd; release with sd_string_free.
   Report strings are JSON: an object, or an array with one record per result. */

SD_API const char* sd_version(void);
/* Diagnostic for the last failing call on this thread ("" if none). */
SD_API const char* sd_last_error(void);
SD_API void sd_string_free(char* s);

/* Polycyclic monoids P_{n,r}. Literals: "ab.a^-1", "1", "0", "(i|y,x|j)". */
SD_API sd_status sd_poly_mul(unsigned n, unsigned r, const char* a, const char* b, char** out);
SD_API sd_status sd_poly_meet(unsigned n, unsigned r, const char* a, const char* b, char** out);
SD_API sd_status sd_poly_leq(unsigned n, unsigned r, const char* a, const char* b, int* out);
/* a -> B with B a comma separated list. */
SD_API sd_status sd_poly_arrow(unsigned n, unsigned r, const char* a, const char* targets, int* out);

/* Prefix codes over an n-letter alphabet, comma separated. */
SD_API sd_status sd_mpc_check(unsigned n, const char* code, int* maximal);
SD_API sd_status sd_mpc_kraft(unsigned n, const char* code, char** out);

/* Graph inverse semigroups. */
SD_API sd_status sd_graph_parse(const char* text, sd_graph** out);
SD_API sd_status sd_graph_load(const char* path, sd_graph** out);
SD_API void sd_graph_free(sd_graph* g);
SD_API sd_status sd_graph_analyze(const sd_graph* g, char** json);
SD_API sd_status sd_graph_mul(const sd_graph* g, const char* a, const char* b, char** out);
SD_API sd_status sd_graph_arrow(const sd_graph* g, const char* a, const char* targets, int* out);

/* Finite inverse semigroups given by tables. */
SD_API sd_status sd_table_parse(const char* text, sd_table** out);
SD_API sd_status sd_table_load(const char* path, sd_table** out);
SD_API sd_status sd_table_symmetric(unsigned k, sd_table** out);
SD_API void sd_table_free(sd_table* t);
SD_API size_t sd_table_size(const sd_table* t);
SD_API sd_status sd_table_format(const sd_table* t, char** out);
SD_API sd_status sd_table_validate(const sd_table* t, char** json);
SD_API sd_status sd_table_predicates(const sd_table* t, char** json);
SD_API sd_status sd_table_congruence_free(const sd_table* t, char** json);
SD_API sd_status sd_table_zero_simplifying(const sd_table* t, char** json);
SD_API sd_status sd_table_complete(const sd_table* t, char** json);
/* dump (may be null) receives the groupoid in object/arrow/compose form. */
SD_API sd_status sd_table_dualize(const sd_table* t, char** json, char** dump);
SD_API sd_status sd_table_classify(const sd_table* t, char** json);
SD_API sd_status sd_table_ideals(const sd_table* t, char** json);

/* Cuntz monoids and Thompson-Higman groups G_{n,r}. */
SD_API sd_status sd_tp_mul(unsigned n, unsigned r, const char* g, const char* h, char** out);
SD_API sd_status sd_tp_inv(unsigned n, unsigned r, const char* g, char** out);
SD_API sd_status sd_tp_reduce(unsigned n, unsigned r, const char* g, char** out);
SD_API sd_status sd_tp_eq(unsigned n, unsigned r, const char* g, const char* h, int* out);
SD_API sd_status sd_tp_from_unit(unsigned n, unsigned r, const char* unit, char** out);
SD_API sd_status sd_tp_to_unit(unsigned n, unsigned r, const char* g, char** out);

/* Randomized self checks. suite: words, poly, graph, finite, filters,
   duality, thompson or all. */
SD_API sd_status sd_selftest(const char* suite, uint64_t seed, uint64_t count, char** json);

#ifdef __cplusplus
}
#endif

#endif
