#ifndef A5GEOM_H
#define A5GEOM_H

#if defined(__GNUC__)
#define A5G_API __attribute__((visibility("default")))
#else
#define A5G_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum a5g_status {
  A5G_OK = 0,
  A5G_ERR_SYNTAX = 1,
  A5G_ERR_ROOT_ORDER = 2,
  A5G_ERR_FIELD_MISMATCH = 3,
  A5G_ERR_DIVISION_BY_ZERO = 4,
  A5G_ERR_INVALID_ARGUMENT = 5,
  A5G_ERR_NOT_HOMOGENEOUS = 6,
  A5G_ERR_NOT_INVERTIBLE = 7,
  A5G_ERR_BOUND_EXCEEDED = 8,
  A5G_ERR_NOT_ON_VARIETY = 9,
  A5G_ERR_SMOOTH_POINT = 10,
  A5G_ERR_DEGENERATE = 11,
  A5G_ERR_NO_SOLUTION = 12,
  A5G_ERR_NOT_FOUND = 13,
  A5G_ERR_CONFIG = 14,
  A5G_ERR_INTERNAL = 99
} a5g_status;

typedef enum a5g_format { A5G_FORMAT_JSON = 0, A5G_FORMAT_MARKDOWN = 1 } a5g_format;

typedef struct a5g_runner a5g_runner;

/* registry_path may be NULL (built-in registry, or $A5GEOM_REGISTRY as an overlay).
   conductor 0 keeps the registry's conductor. */
A5G_API a5g_status a5g_runner_new(const char* registry_path, int conductor, a5g_runner** out);
A5G_API void a5g_runner_free(a5g_runner* r);
A5G_API int a5g_runner_conductor(const a5g_runner* r);

/* filter is a shell glob over check ids; NULL or "" selects all.
   *exit_code gets 0 when nothing failed, 1 otherwise. */
A5G_API a5g_status a5g_run(a5g_runner* r, const char* filter, a5g_format format, int jobs, int timings,
                   char** out_text, int* exit_code);
/* JSON array of {id, category, topic}. */
A5G_API a5g_status a5g_list(a5g_runner* r, const char* filter, char** out_json);
A5G_API a5g_status a5g_describe(a5g_runner* r, const char* id, char** out_json);
/* point: registry name or "[a,b,c,d,e]"; quadric: registry name, literal, or NULL. */
A5G_API a5g_status a5g_cremona(a5g_runner* r, const char* group, const char* point, const char* quadric, char** out_json);

/* Canonical rendering of a cyclotomic or polynomial literal in Q(zeta_conductor). */
A5G_API a5g_status a5g_cyc_render(const char* literal, int conductor, char** out);
A5G_API a5g_status a5g_poly_render(const char* literal, int conductor, char** out);

/* Message of the last failure on this thread; empty if none. */
A5G_API const char* a5g_last_error(void);
A5G_API const char* a5g_status_name(a5g_status s);
A5G_API void a5g_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
