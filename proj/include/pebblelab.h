/*
 * pebblelab — exact graph pebbling and rubbling computations.
 *
 * C interface over the C++ core: opaque handles, status codes, and JSON
 * result documents. Every function that can fail returns a plab_status;
 * a human-readable message for the most recent failure on the calling
 * thread is available from plab_last_error(). Strings returned through
 * out-parameters are heap-allocated and must be released with
 * plab_string_free().
 *
 * Handles are not reference counted: free each graph/distribution exactly
 * once. Graphs are immutable after construction and may be shared across
 * threads; queries allocate their own scratch state.
 */
#ifndef PEBBLELAB_H
#define PEBBLELAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct plab_graph plab_graph;
typedef struct plab_dist plab_dist;

typedef enum plab_status {
    PLAB_OK = 0,
    PLAB_ERR_INVALID = 1,   /* invalid argument or violated invariant */
    PLAB_ERR_PARSE = 2,     /* malformed input text */
    PLAB_INCONCLUSIVE = 3,  /* search budget exhausted; *out_json holds the bracket */
    PLAB_ERR_SIZE = 4,      /* vertex or pebble budget exceeded */
    PLAB_ERR_INTERNAL = 5
} plab_status;

typedef enum plab_move_system {
    PLAB_PEBBLING = 0, /* pebbling moves only */
    PLAB_RUBBLING = 1  /* pebbling plus strict rubbling moves */
} plab_move_system;

/* Engine version string, e.g. "0.1.0". Static storage, do not free. */
const char* plab_version(void);

/* Message for the most recent failing call on this thread. Static per-thread
 * storage, valid until the next failing call; do not free. */
const char* plab_last_error(void);

void plab_string_free(char* s);

/* ---- graphs ----
 * Text format: either an explicit listing
 *     graph <n>
 *     label <i> <string>
 *     edge <u> <v>
 * or a single generator line
 *     family <name> <params...>
 * with families complete/path/cycle/hamming and left-associative
 * `family product ...` chains. `#` starts a comment. Non-simple or
 * disconnected graphs are rejected. vertex_budget <= 0 selects the
 * default (4096). */
plab_status plab_graph_from_text(const char* text, int vertex_budget, plab_graph** out);
plab_status plab_graph_to_text(const plab_graph* g, char** out);
plab_status plab_graph_stats_json(const plab_graph* g, char** out_json);
int plab_graph_vertex_count(const plab_graph* g);
int64_t plab_graph_edge_count(const plab_graph* g);
int plab_graph_diameter(const plab_graph* g);
void plab_graph_free(plab_graph* g);

/* ---- distributions ----
 * Text format:
 *     dist <n>
 *     pebbles <vertex> <count>
 * or the JSON equivalent {"n": n, "counts": [...]}. The total pebble count
 * is capped at 255. */
plab_status plab_dist_from_text(const plab_graph* g, const char* text, plab_dist** out);
plab_status plab_dist_to_json(const plab_dist* d, char** out_json);
int plab_dist_total(const plab_dist* d);
void plab_dist_free(plab_dist* d);

/* ---- queries ----
 * Results are JSON documents (pretty-printed, deterministic for identical
 * inputs). Numeric values are integers or exact dyadic rationals rendered
 * as {"num": a, "log2_den": b}. */

/* Can some executable move sequence put a pebble on `target`? */
plab_status plab_reach_json(const plab_graph* g, const plab_dist* d, int target,
                            plab_move_system sys, char** out_json);

/* Is every vertex reachable? */
plab_status plab_solvable_json(const plab_graph* g, const plab_dist* d,
                               plab_move_system sys, char** out_json);

/* Exact distance-k domination number with an optimal witnessing set. */
plab_status plab_gamma_json(const plab_graph* g, int k, char** out_json);

/* Diameter upper bound and all domination-based lower bounds for
 * k in [k_lo, k_hi] (k_lo >= 2), with the best value per move system. */
plab_status plab_bounds_json(const plab_graph* g, int k_lo, int k_hi, char** out_json);

/* Exact optimal pebbling/rubbling number by pruned ascending enumeration.
 * budget caps the number of reachability queries (0 = default).
 * k_lo/k_hi configure the theorem lower bounds (0 = default range).
 * no_filters != 0 runs the audit mode: no enumeration filters and no
 * theorem shortcut, every smaller size fully enumerated.
 * On PLAB_INCONCLUSIVE *out_json carries the best-known bracket. */
plab_status plab_optimal_json(const plab_graph* g, plab_move_system sys, uint64_t budget,
                              int k_lo, int k_hi, int no_filters, char** out_json);

/* Runs the published-results verification checklist (7 items); the JSON
 * lists each item with pass/fail and an `all_pass` flag. PLAB_OK means the
 * run completed, not that every item passed. */
plab_status plab_verify_paper_json(int no_filters, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PEBBLELAB_H */
