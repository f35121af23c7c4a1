#ifndef WP_CORE_REPORT_HPP
#define WP_CORE_REPORT_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/personas.hpp"
#include "core/stats.hpp"
#include "core/timeline.hpp"
#include "core/wiki_client.hpp"

namespace wp {

struct AnalysisOptions {
  ClassifierConfig classifier;
  CorrelationMode correlation_mode = CorrelationMode::Counts;
  bool exclude_bots = false;
};

// Everything the pipeline derives for a single article.
struct ArticleAnalysis {
  ArticleTimeline timeline;
  // Present when the article has at least two top editors.
  std::optional<CorrelationMatrix> correlation;
  std::vector<PersonaAssignment> assignments;
};

ArticleAnalysis analyze_article(const std::string& article_key, QualityClass quality_class,
                                std::span<const RevisionRecord> revisions,
                                const AnalysisOptions& options);

// Per-article persona table, one row per top editor in timeline order.
std::string personas_csv(const ArticleAnalysis& analysis);

// Full-precision JSON summary of one article (editors, features, correlations).
std::string article_summary_json(const ArticleAnalysis& analysis);

struct StudyManifest {
  std::vector<std::string> featured_titles;
  std::vector<std::string> non_assessed_titles;
  AnalysisOptions options;
  std::filesystem::path cache_dir;
  std::filesystem::path output_dir;
};

struct StudyReport {
  ContingencyTable table;
  // Unset when the observed table is degenerate (a zero row or column).
  std::optional<ChiSquareResult> chi;
  std::map<std::string, ArticleAnalysis> articles;  // key: article title
  std::map<std::string, std::string> errors;        // key: article title
};

std::string study_json(const StudyManifest& manifest, const StudyReport& report);

// Runs fetch -> timeline -> classify for every title, builds the contingency
// table and statistics, and writes the output bundle: contingency.csv,
// study.json, charts/<title>.svg, personas/<title>.csv. Articles that fail
// are recorded under errors and skipped; the run aborts only when a whole
// quality class ends up empty. Output is byte-identical across runs over an
// unchanged cache.
StudyReport run_study(const StudyManifest& manifest, const WikiClient& client);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace wp

#endif  // WP_CORE_REPORT_HPP
