/*
 * wikipersona: C API for mining editor personas from Wikipedia revision
 * histories.
 *
 * All functions are thread-safe as long as each handle is used from one
 * thread at a time. Functions returning wp_status set a per-context error
 * message readable via wp_context_last_error(). Strings returned as char*
 * are owned by the caller and must be released with wp_string_free();
 * const char* results stay owned by their handle.
 */
#ifndef WIKIPERSONA_H
#define WIKIPERSONA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WP_API __declspec(dllexport)
#else
#define WP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wp_status {
  WP_OK = 0,
  WP_ERR_INVALID_ARGUMENT = 1,
  WP_ERR_NOT_FOUND = 2,
  WP_ERR_NETWORK = 3,
  WP_ERR_API = 4,
  WP_ERR_IO = 5,
  WP_ERR_EMPTY_INPUT = 6,
  WP_ERR_TOO_FEW_EDITORS = 7,
  WP_ERR_TOO_SHORT = 8,
  WP_ERR_MATRIX_MISMATCH = 9,
  WP_ERR_DEGENERATE_TABLE = 10,
  WP_ERR_UNKNOWN_QUALITY_CLASS = 11,
  /* A study finished but skipped one or more articles. */
  WP_PARTIAL = 12,
  WP_ERR_INTERNAL = 99
} wp_status;

typedef struct wp_context wp_context;
typedef struct wp_strings wp_strings;
typedef struct wp_analysis wp_analysis;
typedef struct wp_stats wp_stats;

WP_API const char* wp_version(void);
WP_API const char* wp_status_name(wp_status status);
WP_API void wp_string_free(char* s);
/* Percent-encoding used for cache and output file names derived from titles. */
WP_API char* wp_encode_title(const char* title);

/* ---- context: configuration + error reporting ---- */

WP_API wp_context* wp_context_new(void);
WP_API void wp_context_free(wp_context* ctx);
WP_API const char* wp_context_last_error(const wp_context* ctx);
WP_API wp_status wp_context_set_api_url(wp_context* ctx, const char* url);
WP_API wp_status wp_context_set_cache_dir(wp_context* ctx, const char* dir);
/* Flat key=value config file; '#' starts a comment line. */
WP_API wp_status wp_context_load_config(wp_context* ctx, const char* path);
/*
 * Classifier keys: top_n, cowboy_max_active_quarters, cowboy_peak_share,
 * rebel_negative_fraction, conqueror_min_dominant_quarters,
 * sustained_min_active_fraction. Pipeline keys: correlation_mode
 * (counts|derivatives), exclude_bots (true|false), stub_min_bytes. Client
 * keys: api_url, user_agent, max_retries, retry_base_delay_ms, fetch_limit.
 */
WP_API wp_status wp_context_set_option(wp_context* ctx, const char* key, const char* value);

/* ---- ingestion ---- */

/* Fetches (or reuses) the cached revision history of one article. */
WP_API wp_status wp_fetch_article(wp_context* ctx, const char* title, int64_t* revision_count);
/* Revision count, distinct editor count and stub flag for one article. */
WP_API wp_status wp_article_meta(wp_context* ctx, const char* title, int64_t* revision_count,
                                 int64_t* distinct_editors, int* is_stub);
/* Pure eligibility predicate: not a stub, >= min_edits edits, >= min_authors authors. */
WP_API int wp_passes_eligibility(int64_t revision_count, int64_t distinct_editors, int is_stub,
                                 int64_t min_edits, int64_t min_authors);
/* n distinct random main-namespace titles. */
WP_API wp_status wp_sample_random(wp_context* ctx, int n, wp_strings** out);

WP_API size_t wp_strings_count(const wp_strings* list);
WP_API const char* wp_strings_get(const wp_strings* list, size_t index);
WP_API void wp_strings_free(wp_strings* list);

/* ---- single-article analysis ---- */

/* quality_class: "featured", "na" or "other". */
WP_API wp_status wp_analyze(wp_context* ctx, const char* title, const char* quality_class,
                            wp_analysis** out);
WP_API void wp_analysis_free(wp_analysis* analysis);
WP_API size_t wp_analysis_editor_count(const wp_analysis* analysis);
WP_API const char* wp_analysis_editor(const wp_analysis* analysis, size_t index);
WP_API const char* wp_analysis_persona(const wp_analysis* analysis, size_t index);
WP_API const char* wp_analysis_rule(const wp_analysis* analysis, size_t index);
WP_API char* wp_analysis_personas_csv(const wp_analysis* analysis);
WP_API char* wp_analysis_chart_svg(const wp_analysis* analysis);
WP_API char* wp_analysis_summary_json(const wp_analysis* analysis);

/* ---- contingency statistics ---- */

/* CSV layout: header row of persona names, first column quality class. */
WP_API wp_status wp_stats_load_csv(wp_context* ctx, const char* path, wp_stats** out);
/* counts is row-major rows x cols. */
WP_API wp_status wp_stats_from_counts(wp_context* ctx, size_t rows, size_t cols,
                                      const int64_t* counts, const char* const* row_labels,
                                      const char* const* col_labels, wp_stats** out);
WP_API void wp_stats_free(wp_stats* stats);
WP_API double wp_stats_statistic(const wp_stats* stats);
WP_API int wp_stats_df(const wp_stats* stats);
WP_API double wp_stats_p_value(const wp_stats* stats);
WP_API double wp_stats_expected(const wp_stats* stats, size_t row, size_t col);
WP_API double wp_stats_residual(const wp_stats* stats, size_t row, size_t col);
WP_API double wp_stats_percent(const wp_stats* stats, size_t row, size_t col);
WP_API char* wp_stats_json(const wp_stats* stats);
WP_API char* wp_stats_table_csv(const wp_stats* stats);

/* Upper-tail chi-square probability Q(df/2, x/2); NaN outside the domain. */
WP_API double wp_chi_square_survival(double x, int df);

/* ---- full study ---- */

/*
 * Runs the two-class study over the title list files and writes the output
 * bundle (contingency.csv, study.json, charts/, personas/) to output_dir.
 * Returns WP_OK, WP_PARTIAL when articles were skipped (count in *skipped),
 * or an error when the study could not complete.
 */
WP_API wp_status wp_run_study(wp_context* ctx, const char* featured_list, const char* na_list,
                              const char* output_dir, int64_t* skipped);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WIKIPERSONA_H */
