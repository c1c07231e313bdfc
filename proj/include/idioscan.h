/* idioscan — idiosyncratic-pattern scanner for C/C++ if-conditions.
 *
 * C API over the core library. Every function returns an idioscan_status;
 * on failure, idioscan_last_error() holds a message for the calling thread.
 * Strings handed out through char** parameters are heap copies the caller
 * releases with idioscan_string_free().
 */
#ifndef IDIOSCAN_H
#define IDIOSCAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum idioscan_status {
    IDIOSCAN_OK = 0,
    IDIOSCAN_ERR_IO = 1,               /* unreadable root, file, or output path */
    IDIOSCAN_ERR_FORMAT = 2,           /* malformed dictionary file */
    IDIOSCAN_ERR_INVALID_ARGUMENT = 3, /* bad option value or null handle */
    IDIOSCAN_ERR_PATTERN = 4,          /* unparseable condition or pattern text */
    IDIOSCAN_ERR_BUDGET = 5,           /* symmetric-delete index over budget */
    IDIOSCAN_ERR_INTERNAL = 6
} idioscan_status;

/* Stable name for a status code ("ok", "io_error", ...). */
const char* idioscan_status_name(int status);

/* Message from the most recent failing call on this thread; never NULL. */
const char* idioscan_last_error(void);

/* Frees any string returned through a char** out-parameter. NULL is a no-op. */
void idioscan_string_free(char* s);

/* Opaque handles. */
typedef struct idioscan_dict idioscan_dict;
typedef struct idioscan_scan_result idioscan_scan_result;

typedef struct idioscan_options {
    double alpha;          /* anomaly threshold, percent (default 5.0) */
    int max_cost;          /* maximum edit distance (default 2) */
    int l2_depth;          /* subtree depth kept at L2 (default 1) */
    int l2_prune_leaves;   /* nonzero: collapse the root's leaf children too */
    unsigned workers;      /* 0 = hardware concurrency */
    int report_all;        /* nonzero: emit non-anomalous entries too */
    int dedup;             /* nonzero: one entry per distinct L1 pattern */
    size_t cache_capacity; /* per-worker correction cache entries */
    /* File extensions considered during directory walks (with leading dot,
     * e.g. ".c"). NULL/0 selects the built-in C/C++ set. */
    const char* const* extensions;
    size_t num_extensions;
} idioscan_options;

/* Fills *opts with the defaults above. */
void idioscan_options_init(idioscan_options* opts);

/* Mines `roots` (files or directories) into a new dictionary handle. When
 * out_stats_json is non-NULL it receives a JSON object with mining counters. */
int idioscan_mine(const char* const* roots, size_t num_roots, const idioscan_options* opts,
                  idioscan_dict** out_dict, char** out_stats_json);

int idioscan_dict_load(const char* path, idioscan_dict** out_dict);
int idioscan_dict_save(const idioscan_dict* dict, const char* path);

/* Frequency histogram CSV, one section per abstraction level. */
int idioscan_dict_histogram_csv(const idioscan_dict* dict, char** out_csv);

void idioscan_dict_free(idioscan_dict* dict);

/* Scans `roots` against `dict`. The result handle owns the report entries. */
int idioscan_scan(const char* const* roots, size_t num_roots, const idioscan_dict* dict,
                  const idioscan_options* opts, idioscan_scan_result** out_result);

/* Entries present in the report (after report_all / dedup shaping). */
size_t idioscan_scan_entry_count(const idioscan_scan_result* result);

/* Anomalous conditions found, duplicates included — nonzero means the scan
 * should fail a CI gate. */
size_t idioscan_scan_anomaly_count(const idioscan_scan_result* result);

/* Renders the report; `format` is "text" or "jsonl". */
int idioscan_scan_render(const idioscan_scan_result* result, const char* format,
                         char** out_report);

/* JSON object with scan counters. */
int idioscan_scan_summary_json(const idioscan_scan_result* result, char** out_json);

void idioscan_scan_result_free(idioscan_scan_result* result);

/* Parses one condition expression and returns both abstractions as
 * "L1 <pattern>\nL2 <pattern>\n". Uses opts for the L2 knobs. */
int idioscan_abstract(const char* condition, const idioscan_options* opts, char** out_dump);

/* Looks one serialized pattern up in `dict` at `level` ("L1" or "L2") and
 * returns a block with its count, verdict, and ranked correction set under
 * opts->alpha / opts->max_cost. */
int idioscan_dump(const idioscan_dict* dict, const char* pattern_text, const char* level,
                  const idioscan_options* opts, char** out_dump);

/* Benchmarks the three correction algorithms on identical queries. `dict`
 * may be NULL to use a synthetic dictionary of `dict_size` patterns.
 * *out_csv receives one aggregate row per algorithm; *out_notes (optional)
 * receives newline-joined notes: skipped algorithms, an exceeded deletion-
 * index budget, or cross-algorithm divergences (always empty in practice). */
int idioscan_bench(const idioscan_dict* dict, size_t dict_size, size_t targets, int max_cost,
                   uint64_t seed, uint64_t symdel_budget, char** out_csv, char** out_notes);

#ifdef __cplusplus
}
#endif

#endif /* IDIOSCAN_H */
