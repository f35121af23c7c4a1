#include "wikipersona.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/igamma.hpp"
#include "core/ingest.hpp"
#include "core/personas.hpp"
#include "core/report.hpp"
#include "core/stats.hpp"
#include "core/strutil.hpp"
#include "core/svg.hpp"
#include "core/wiki_client.hpp"

struct wp_context {
  wp::WikiClientOptions client_options;
  std::filesystem::path cache_dir = "cache";
  wp::AnalysisOptions analysis_options;
  int64_t stub_min_bytes = 1500;
  std::string last_error;
};

struct wp_strings {
  std::vector<std::string> values;
};

struct wp_analysis {
  wp::ArticleAnalysis analysis;
};

struct wp_stats {
  wp::ContingencyTable table;
  wp::ChiSquareResult result;
};

namespace {

wp_status to_status(wp::ErrorCode code) {
  switch (code) {
    case wp::ErrorCode::InvalidArgument: return WP_ERR_INVALID_ARGUMENT;
    case wp::ErrorCode::NotFound: return WP_ERR_NOT_FOUND;
    case wp::ErrorCode::Network: return WP_ERR_NETWORK;
    case wp::ErrorCode::Api: return WP_ERR_API;
    case wp::ErrorCode::Io: return WP_ERR_IO;
    case wp::ErrorCode::EmptyInput: return WP_ERR_EMPTY_INPUT;
    case wp::ErrorCode::TooFewEditors: return WP_ERR_TOO_FEW_EDITORS;
    case wp::ErrorCode::TooShort: return WP_ERR_TOO_SHORT;
    case wp::ErrorCode::MatrixMismatch: return WP_ERR_MATRIX_MISMATCH;
    case wp::ErrorCode::DegenerateTable: return WP_ERR_DEGENERATE_TABLE;
    case wp::ErrorCode::UnknownQualityClass: return WP_ERR_UNKNOWN_QUALITY_CLASS;
  }
  return WP_ERR_INTERNAL;
}

template <typename Fn>
wp_status guarded(wp_context* ctx, Fn&& fn) {
  if (ctx == nullptr) return WP_ERR_INVALID_ARGUMENT;
  try {
    fn();
    ctx->last_error.clear();
    return WP_OK;
  } catch (const wp::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WP_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool parse_bool_option(const std::string& value) {
  std::string v = wp::to_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw wp::InvalidArgumentError("not a boolean: " + value);
}

int parse_int_option(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw wp::InvalidArgumentError("config key " + key + ": not an integer: " + value);
  }
}

void set_context_option(wp_context* ctx, const std::string& key, const std::string& value) {
  if (key == "correlation_mode") {
    std::string v = wp::to_lower(value);
    if (v == "counts") ctx->analysis_options.correlation_mode = wp::CorrelationMode::Counts;
    else if (v == "derivatives")
      ctx->analysis_options.correlation_mode = wp::CorrelationMode::Derivatives;
    else throw wp::InvalidArgumentError("correlation_mode must be counts or derivatives");
  } else if (key == "exclude_bots") {
    ctx->analysis_options.exclude_bots = parse_bool_option(value);
  } else if (key == "stub_min_bytes") {
    ctx->stub_min_bytes = parse_int_option(key, value);
  } else if (key == "api_url") {
    ctx->client_options.api_url = value;
  } else if (key == "user_agent") {
    ctx->client_options.user_agent = value;
  } else if (key == "max_retries") {
    ctx->client_options.max_retries = parse_int_option(key, value);
  } else if (key == "retry_base_delay_ms") {
    ctx->client_options.retry_base_delay_ms = parse_int_option(key, value);
  } else if (key == "fetch_limit") {
    ctx->client_options.max_concurrent_fetches = parse_int_option(key, value);
  } else {
    ctx->analysis_options.classifier.set(key, value);
  }
}

wp_stats* make_stats(wp::ContingencyTable table) {
  auto* stats = new wp_stats;
  stats->result = wp::chi_square_independence(table);
  stats->table = std::move(table);
  return stats;
}

bool cell_in_range(const wp_stats* stats, size_t row, size_t col) {
  return stats != nullptr && row < stats->table.row_labels.size() &&
         col < stats->table.col_labels.size();
}

}  // namespace

extern "C" {

const char* wp_version(void) { return "0.1.0"; }

const char* wp_status_name(wp_status status) {
  switch (status) {
    case WP_OK: return "ok";
    case WP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WP_ERR_NOT_FOUND: return "not found";
    case WP_ERR_NETWORK: return "network error";
    case WP_ERR_API: return "api error";
    case WP_ERR_IO: return "io error";
    case WP_ERR_EMPTY_INPUT: return "empty input";
    case WP_ERR_TOO_FEW_EDITORS: return "too few editors";
    case WP_ERR_TOO_SHORT: return "series too short";
    case WP_ERR_MATRIX_MISMATCH: return "matrix mismatch";
    case WP_ERR_DEGENERATE_TABLE: return "degenerate table";
    case WP_ERR_UNKNOWN_QUALITY_CLASS: return "unknown quality class";
    case WP_PARTIAL: return "partial";
    case WP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void wp_string_free(char* s) { std::free(s); }

char* wp_encode_title(const char* title) {
  if (title == nullptr) return nullptr;
  return copy_string(wp::percent_encode(title));
}

wp_context* wp_context_new(void) { return new (std::nothrow) wp_context; }

void wp_context_free(wp_context* ctx) { delete ctx; }

const char* wp_context_last_error(const wp_context* ctx) {
  return ctx != nullptr ? ctx->last_error.c_str() : "";
}

wp_status wp_context_set_api_url(wp_context* ctx, const char* url) {
  return guarded(ctx, [&] {
    if (url == nullptr || *url == '\0') throw wp::InvalidArgumentError("api url must be non-empty");
    ctx->client_options.api_url = url;
  });
}

wp_status wp_context_set_cache_dir(wp_context* ctx, const char* dir) {
  return guarded(ctx, [&] {
    if (dir == nullptr || *dir == '\0') throw wp::InvalidArgumentError("cache dir must be non-empty");
    ctx->cache_dir = dir;
  });
}

wp_status wp_context_load_config(wp_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (path == nullptr) throw wp::InvalidArgumentError("config path is null");
    std::ifstream in(path);
    if (!in) throw wp::IoError(std::string("cannot open config file ") + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view sv = wp::trim(line);
      if (sv.empty() || sv.front() == '#') continue;
      size_t eq = sv.find('=');
      if (eq == std::string_view::npos) {
        throw wp::IoError(std::string(path) + ":" + std::to_string(line_no) +
                          ": expected key = value");
      }
      set_context_option(ctx, std::string(wp::trim(sv.substr(0, eq))),
                         std::string(wp::trim(sv.substr(eq + 1))));
    }
    ctx->analysis_options.classifier.validate();
  });
}

wp_status wp_context_set_option(wp_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    if (key == nullptr || value == nullptr) {
      throw wp::InvalidArgumentError("option key/value is null");
    }
    set_context_option(ctx, key, value);
  });
}

wp_status wp_fetch_article(wp_context* ctx, const char* title, int64_t* revision_count) {
  return guarded(ctx, [&] {
    if (title == nullptr) throw wp::InvalidArgumentError("title is null");
    wp::WikiClient client(ctx->client_options);
    std::vector<wp::RevisionRecord> revisions =
        wp::fetch_revisions_cached(client, title, ctx->cache_dir);
    if (revision_count != nullptr) *revision_count = static_cast<int64_t>(revisions.size());
  });
}

wp_status wp_article_meta(wp_context* ctx, const char* title, int64_t* revision_count,
                          int64_t* distinct_editors, int* is_stub) {
  return guarded(ctx, [&] {
    if (title == nullptr) throw wp::InvalidArgumentError("title is null");
    wp::WikiClient client(ctx->client_options);
    wp::MetaOptions options;
    options.stub_min_bytes = ctx->stub_min_bytes;
    wp::ArticleMeta meta = wp::fetch_article_meta(client, title, ctx->cache_dir, options);
    if (revision_count != nullptr) *revision_count = meta.revision_count;
    if (distinct_editors != nullptr) *distinct_editors = meta.distinct_editor_count;
    if (is_stub != nullptr) *is_stub = meta.is_stub ? 1 : 0;
  });
}

int wp_passes_eligibility(int64_t revision_count, int64_t distinct_editors, int is_stub,
                          int64_t min_edits, int64_t min_authors) {
  wp::ArticleMeta meta;
  meta.revision_count = revision_count;
  meta.distinct_editor_count = distinct_editors;
  meta.is_stub = is_stub != 0;
  return wp::passes_eligibility(meta, min_edits, min_authors) ? 1 : 0;
}

wp_status wp_sample_random(wp_context* ctx, int n, wp_strings** out) {
  return guarded(ctx, [&] {
    if (out == nullptr) throw wp::InvalidArgumentError("output pointer is null");
    wp::WikiClient client(ctx->client_options);
    auto* list = new wp_strings;
    try {
      list->values = wp::sample_random_candidates(client, n);
    } catch (...) {
      delete list;
      throw;
    }
    *out = list;
  });
}

size_t wp_strings_count(const wp_strings* list) {
  return list != nullptr ? list->values.size() : 0;
}

const char* wp_strings_get(const wp_strings* list, size_t index) {
  if (list == nullptr || index >= list->values.size()) return nullptr;
  return list->values[index].c_str();
}

void wp_strings_free(wp_strings* list) { delete list; }

wp_status wp_analyze(wp_context* ctx, const char* title, const char* quality_class,
                     wp_analysis** out) {
  return guarded(ctx, [&] {
    if (title == nullptr || out == nullptr) {
      throw wp::InvalidArgumentError("title/output pointer is null");
    }
    wp::QualityClass qc = quality_class != nullptr ? wp::parse_quality_class(quality_class)
                                                   : wp::QualityClass::Other;
    wp::WikiClient client(ctx->client_options);
    std::vector<wp::RevisionRecord> revisions =
        wp::fetch_revisions_cached(client, title, ctx->cache_dir);
    auto* analysis = new wp_analysis;
    try {
      analysis->analysis = wp::analyze_article(title, qc, revisions, ctx->analysis_options);
    } catch (...) {
      delete analysis;
      throw;
    }
    *out = analysis;
  });
}

void wp_analysis_free(wp_analysis* analysis) { delete analysis; }

size_t wp_analysis_editor_count(const wp_analysis* analysis) {
  return analysis != nullptr ? analysis->analysis.assignments.size() : 0;
}

const char* wp_analysis_editor(const wp_analysis* analysis, size_t index) {
  if (analysis == nullptr || index >= analysis->analysis.assignments.size()) return nullptr;
  return analysis->analysis.assignments[index].editor_key.c_str();
}

const char* wp_analysis_persona(const wp_analysis* analysis, size_t index) {
  if (analysis == nullptr || index >= analysis->analysis.assignments.size()) return nullptr;
  return wp::persona_name(analysis->analysis.assignments[index].persona);
}

const char* wp_analysis_rule(const wp_analysis* analysis, size_t index) {
  if (analysis == nullptr || index >= analysis->analysis.assignments.size()) return nullptr;
  return analysis->analysis.assignments[index].rule_fired.c_str();
}

char* wp_analysis_personas_csv(const wp_analysis* analysis) {
  if (analysis == nullptr) return nullptr;
  return copy_string(wp::personas_csv(analysis->analysis));
}

char* wp_analysis_chart_svg(const wp_analysis* analysis) {
  if (analysis == nullptr) return nullptr;
  return copy_string(wp::render_oscillation_chart(analysis->analysis.timeline,
                                                  analysis->analysis.assignments));
}

char* wp_analysis_summary_json(const wp_analysis* analysis) {
  if (analysis == nullptr) return nullptr;
  return copy_string(wp::article_summary_json(analysis->analysis));
}

wp_status wp_stats_load_csv(wp_context* ctx, const char* path, wp_stats** out) {
  return guarded(ctx, [&] {
    if (path == nullptr || out == nullptr) {
      throw wp::InvalidArgumentError("path/output pointer is null");
    }
    *out = make_stats(wp::load_contingency_csv(path));
  });
}

wp_status wp_stats_from_counts(wp_context* ctx, size_t rows, size_t cols, const int64_t* counts,
                               const char* const* row_labels, const char* const* col_labels,
                               wp_stats** out) {
  return guarded(ctx, [&] {
    if (counts == nullptr || row_labels == nullptr || col_labels == nullptr || out == nullptr) {
      throw wp::InvalidArgumentError("counts/labels/output pointer is null");
    }
    std::vector<std::string> row_names(row_labels, row_labels + rows);
    std::vector<std::string> col_names(col_labels, col_labels + cols);
    std::vector<std::vector<int64_t>> matrix(rows, std::vector<int64_t>(cols, 0));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) matrix[i][j] = counts[i * cols + j];
    }
    *out = make_stats(wp::ContingencyTable::from_counts(std::move(row_names),
                                                        std::move(col_names), std::move(matrix)));
  });
}

void wp_stats_free(wp_stats* stats) { delete stats; }

double wp_stats_statistic(const wp_stats* stats) {
  return stats != nullptr ? stats->result.statistic : std::nan("");
}

int wp_stats_df(const wp_stats* stats) { return stats != nullptr ? stats->result.df : 0; }

double wp_stats_p_value(const wp_stats* stats) {
  return stats != nullptr ? stats->result.p_value : std::nan("");
}

double wp_stats_expected(const wp_stats* stats, size_t row, size_t col) {
  return cell_in_range(stats, row, col) ? stats->result.expected[row][col] : std::nan("");
}

double wp_stats_residual(const wp_stats* stats, size_t row, size_t col) {
  return cell_in_range(stats, row, col) ? stats->result.std_residuals[row][col] : std::nan("");
}

double wp_stats_percent(const wp_stats* stats, size_t row, size_t col) {
  return cell_in_range(stats, row, col) ? stats->result.percent_rows[row][col] : std::nan("");
}

char* wp_stats_json(const wp_stats* stats) {
  if (stats == nullptr) return nullptr;
  nlohmann::ordered_json j;
  j["row_labels"] = stats->table.row_labels;
  j["col_labels"] = stats->table.col_labels;
  j["counts"] = stats->table.counts;
  j["row_totals"] = stats->table.row_totals;
  j["col_totals"] = stats->table.col_totals;
  j["grand_total"] = stats->table.grand_total;
  j["statistic"] = stats->result.statistic;
  j["df"] = stats->result.df;
  j["p_value"] = stats->result.p_value;
  j["expected"] = stats->result.expected;
  j["std_residuals"] = stats->result.std_residuals;
  j["percent_rows"] = stats->result.percent_rows;
  return copy_string(j.dump(2) + "\n");
}

char* wp_stats_table_csv(const wp_stats* stats) {
  if (stats == nullptr) return nullptr;
  return copy_string(wp::format_contingency_csv(stats->table, &stats->result));
}

double wp_chi_square_survival(double x, int df) {
  try {
    return wp::chi_square_survival(x, df);
  } catch (const std::exception&) {
    return std::nan("");
  }
}

wp_status wp_run_study(wp_context* ctx, const char* featured_list, const char* na_list,
                       const char* output_dir, int64_t* skipped) {
  if (ctx == nullptr) return WP_ERR_INVALID_ARGUMENT;
  if (skipped != nullptr) *skipped = 0;
  try {
    if (featured_list == nullptr || na_list == nullptr || output_dir == nullptr) {
      throw wp::InvalidArgumentError("study paths must be non-null");
    }
    wp::StudyManifest manifest;
    manifest.featured_titles = wp::read_title_list(featured_list);
    manifest.non_assessed_titles = wp::read_title_list(na_list);
    manifest.options = ctx->analysis_options;
    manifest.cache_dir = ctx->cache_dir;
    manifest.output_dir = output_dir;
    wp::WikiClient client(ctx->client_options);
    wp::StudyReport report = wp::run_study(manifest, client);

    int64_t skipped_articles = 0;
    std::string summary;
    for (const auto& [key, message] : report.errors) {
      if (key != "(statistics)") ++skipped_articles;
      if (!summary.empty()) summary += "; ";
      summary += key + ": " + message;
    }
    if (skipped != nullptr) *skipped = skipped_articles;
    ctx->last_error = summary;
    return skipped_articles > 0 ? WP_PARTIAL : WP_OK;
  } catch (const wp::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return WP_ERR_INTERNAL;
  }
}

} /* extern "C" */
