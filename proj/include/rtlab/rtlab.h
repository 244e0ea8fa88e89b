#ifndef RTLAB_RTLAB_H
#define RTLAB_RTLAB_H

#include <stdint.h>

#if defined(RTLAB_BUILDING_LIBRARY)
#define RT_API __attribute__((visibility("default")))
#else
#define RT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; on failure rt_last_error() describes it.
   Strings returned through char** are owned by the caller and released with
   rt_string_free. Patterns are "directed" or "transitive". */
typedef enum {
  RT_OK = 0,
  RT_E_INVALID_ARGUMENT = 1, /* malformed input: bad JSON, out-of-range values, unknown ids */
  RT_E_NULL_POINTER = 2,
  RT_E_INTERNAL = 3
} rt_status;

typedef struct rt_graph rt_graph;

RT_API const char* rt_version(void);
/* Message of the last failed call on this thread; "" if none. */
RT_API const char* rt_last_error(void);
RT_API void rt_string_free(char* s);

/* ---- graphs ---- */
RT_API rt_status rt_graph_new(int n, int c, rt_graph** out);
RT_API rt_status rt_graph_from_json(const char* text, rt_graph** out);
RT_API void rt_graph_free(rt_graph* g);
RT_API rt_status rt_graph_add_edge(rt_graph* g, int color, int from, int to);
RT_API rt_status rt_graph_to_json(const rt_graph* g, char** out);
RT_API rt_status rt_graph_dims(const rt_graph* g, int* n, int* c);
RT_API rt_status rt_graph_count_color(const rt_graph* g, int color, uint64_t* out);
RT_API rt_status rt_graph_count_total(const rt_graph* g, uint64_t* out);
RT_API rt_status rt_graph_is_oriented(const rt_graph* g, int* out);
/* Edges of `color` between vertex sets u[0..nu) and v[0..nv). */
RT_API rt_status rt_graph_count_between(const rt_graph* g, int color, const int* u, int nu,
                                        const int* v, int nv, uint64_t* out);
/* 1 when the graphs hold identical edge sets and dimensions. */
RT_API rt_status rt_graph_equal(const rt_graph* a, const rt_graph* b, int* out);

/* ---- rainbow triangles ---- */
/* *found is 1 and *witness_json (if non-null) receives the least witness, or
   *found is 0 and *witness_json is set to NULL. */
RT_API rt_status rt_detect(const rt_graph* g, const char* pattern, int* found, char** witness_json);
RT_API rt_status rt_count_rainbow(const rt_graph* g, const char* pattern, uint64_t* out);
/* Auxiliary digraph of heavy pairs (single color). */
RT_API rt_status rt_build_h(const rt_graph* g, rt_graph** out);

/* ---- constructions ---- */
/* ids: bipartite-double, directed3, transitive3, oriented-cyclic, two-color-heavy */
RT_API rt_status rt_construct(const char* id, int n, int c, rt_graph** out);
RT_API rt_status rt_expected_count(const char* id, int n, int c, int color, uint64_t* out);
/* Per-color counts against closed forms plus exhaustive pattern check. */
RT_API rt_status rt_construction_report(const char* id, int n, int c, char** out_json);

/* ---- exhaustive extremal search ---- */
/* graph_class: "digraph" | "oriented"; objective: "max-total" | "max-min";
   max_nodes 0 means unlimited. */
RT_API rt_status rt_search(int n, int c, const char* pattern, const char* graph_class,
                           const char* objective, uint64_t max_nodes, char** out_json);

/* ---- local bound catalogues ---- */
RT_API rt_status rt_catalogue_names(char** out_json);
RT_API rt_status rt_catalogue_builtin(const char* name, char** out_json);
/* Evaluates a catalogue document (JSON array of scenarios). */
RT_API rt_status rt_catalogue_run(const char* catalogue_json, int jobs, int* violated, char** out_json);
RT_API rt_status rt_catalogue_run_builtin(const char* name, int jobs, int* violated, char** out_json);

/* ---- numeric and exact checks ---- */
RT_API rt_status rt_lemma21(int a, int b, char** out_json);
RT_API rt_status rt_optscan(double step, int polish_iters, int strict, int jobs, char** out_json);
RT_API rt_status rt_thresholds(char** out_json);

/* 64-bit FNV-1a digest of a byte string as 16 hex digits. */
RT_API rt_status rt_digest(const char* bytes, uint64_t len, char** out_hex);

#ifdef __cplusplus
}
#endif

#endif
