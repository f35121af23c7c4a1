#include "core/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "core/cache.hpp"
#include "core/errors.hpp"
#include "core/ingest.hpp"
#include "core/strutil.hpp"
#include "core/svg.hpp"

namespace wp {

using ordered_json = nlohmann::ordered_json;

ArticleAnalysis analyze_article(const std::string& article_key, QualityClass quality_class,
                                std::span<const RevisionRecord> revisions,
                                const AnalysisOptions& options) {
  QuarterBuckets buckets = bucket_by_quarter(revisions);
  ArticleAnalysis analysis;
  analysis.timeline = select_top_editors(article_key, quality_class, buckets,
                                         options.classifier.top_n, options.exclude_bots);
  if (analysis.timeline.series.size() >= 2) {
    analysis.correlation = correlation_matrix(analysis.timeline, options.correlation_mode);
  }
  std::vector<EditorFeatures> features = extract_features(
      analysis.timeline, analysis.correlation.has_value() ? &*analysis.correlation : nullptr);
  analysis.assignments.reserve(features.size());
  for (const EditorFeatures& f : features) {
    analysis.assignments.push_back(classify(f, options.classifier));
  }
  return analysis;
}

static std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string personas_csv(const ArticleAnalysis& analysis) {
  std::string out =
      "editor_key,persona,rule_fired,total_edits,active_quarters,span_quarters,peak_share,"
      "onset_quarter,dominant_quarters,negative_corr_fraction\n";
  for (size_t i = 0; i < analysis.assignments.size(); ++i) {
    const PersonaAssignment& a = analysis.assignments[i];
    const EditorFeatures& f = a.features;
    out += csv_field(a.editor_key);
    out += ",";
    out += persona_name(a.persona);
    out += "," + a.rule_fired;
    out += "," + std::to_string(analysis.timeline.series[i].total);
    out += "," + std::to_string(f.active_quarters);
    out += "," + std::to_string(f.span_quarters);
    out += "," + fixed6(f.peak_share);
    out += "," + std::to_string(f.onset_quarter);
    out += "," + std::to_string(f.dominant_quarters);
    out += ",";
    if (f.negative_corr_fraction.has_value()) out += fixed6(*f.negative_corr_fraction);
    out += "\n";
  }
  return out;
}

static ordered_json features_json(const EditorFeatures& f) {
  ordered_json j;
  j["active_quarters"] = f.active_quarters;
  j["span_quarters"] = f.span_quarters;
  j["peak_share"] = f.peak_share;
  j["onset_quarter"] = f.onset_quarter;
  j["dominant_quarters"] = f.dominant_quarters;
  if (f.negative_corr_fraction.has_value()) {
    j["negative_corr_fraction"] = *f.negative_corr_fraction;
  } else {
    j["negative_corr_fraction"] = nullptr;
  }
  return j;
}

static ordered_json article_json(const ArticleAnalysis& analysis) {
  ordered_json j;
  j["quality_class"] = quality_class_name(analysis.timeline.quality_class);
  j["start_quarter"] = analysis.timeline.start_quarter.value;
  j["start_quarter_label"] = analysis.timeline.start_quarter.label();
  j["span_quarters"] = static_cast<int64_t>(analysis.timeline.span());
  ordered_json editors = ordered_json::array();
  for (size_t i = 0; i < analysis.assignments.size(); ++i) {
    const PersonaAssignment& a = analysis.assignments[i];
    ordered_json e;
    e["editor_key"] = a.editor_key;
    e["persona"] = persona_name(a.persona);
    e["rule_fired"] = a.rule_fired;
    e["total_edits"] = analysis.timeline.series[i].total;
    e["counts"] = analysis.timeline.series[i].counts;
    e["features"] = features_json(a.features);
    editors.push_back(std::move(e));
  }
  j["editors"] = std::move(editors);
  return j;
}

std::string article_summary_json(const ArticleAnalysis& analysis) {
  ordered_json j = article_json(analysis);
  j["article_key"] = analysis.timeline.article_key;
  if (analysis.correlation.has_value()) {
    ordered_json corr;
    corr["editor_keys"] = analysis.correlation->editor_keys;
    ordered_json rows = ordered_json::array();
    for (const auto& row : analysis.correlation->entries) {
      ordered_json r = ordered_json::array();
      for (const std::optional<double>& v : row) {
        if (v.has_value()) r.push_back(*v);
        else r.push_back(nullptr);
      }
      rows.push_back(std::move(r));
    }
    corr["entries"] = std::move(rows);
    j["correlation"] = std::move(corr);
  } else {
    j["correlation"] = nullptr;
  }
  return j.dump(2) + "\n";
}

static ordered_json manifest_json(const StudyManifest& manifest) {
  ordered_json j;
  j["featured_titles"] = manifest.featured_titles;
  j["non_assessed_titles"] = manifest.non_assessed_titles;
  j["cache_dir"] = manifest.cache_dir.string();
  j["output_dir"] = manifest.output_dir.string();
  ordered_json config;
  const ClassifierConfig& c = manifest.options.classifier;
  config["top_n"] = c.top_n;
  config["cowboy_max_active_quarters"] = c.cowboy_max_active_quarters;
  config["cowboy_peak_share"] = c.cowboy_peak_share;
  config["rebel_negative_fraction"] = c.rebel_negative_fraction;
  config["conqueror_min_dominant_quarters"] = c.conqueror_min_dominant_quarters;
  config["sustained_min_active_fraction"] = c.sustained_min_active_fraction;
  config["correlation_mode"] =
      manifest.options.correlation_mode == CorrelationMode::Counts ? "counts" : "derivatives";
  config["exclude_bots"] = manifest.options.exclude_bots;
  j["config"] = std::move(config);
  return j;
}

std::string study_json(const StudyManifest& manifest, const StudyReport& report) {
  ordered_json j;
  j["manifest"] = manifest_json(manifest);

  ordered_json articles = ordered_json::object();
  for (const auto& [title, analysis] : report.articles) {
    articles[title] = article_json(analysis);
  }
  j["articles"] = std::move(articles);

  ordered_json errors = ordered_json::object();
  for (const auto& [title, message] : report.errors) errors[title] = message;
  j["errors"] = std::move(errors);

  ordered_json table;
  table["row_labels"] = report.table.row_labels;
  table["col_labels"] = report.table.col_labels;
  table["counts"] = report.table.counts;
  table["row_totals"] = report.table.row_totals;
  table["col_totals"] = report.table.col_totals;
  table["grand_total"] = report.table.grand_total;
  j["contingency"] = std::move(table);

  if (report.chi.has_value()) {
    const ChiSquareResult& chi = *report.chi;
    ordered_json stats;
    stats["statistic"] = chi.statistic;
    stats["df"] = chi.df;
    stats["p_value"] = chi.p_value;
    stats["expected"] = chi.expected;
    stats["std_residuals"] = chi.std_residuals;
    stats["percent_rows"] = chi.percent_rows;
    j["chi_square"] = std::move(stats);
  } else {
    j["chi_square"] = nullptr;
  }
  return j.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

static void validate_manifest(const StudyManifest& manifest) {
  if (manifest.featured_titles.empty() || manifest.non_assessed_titles.empty()) {
    throw InvalidArgumentError("both title lists must be non-empty for a two-class study");
  }
  std::set<std::string> featured(manifest.featured_titles.begin(),
                                 manifest.featured_titles.end());
  for (const std::string& title : manifest.non_assessed_titles) {
    if (featured.count(title) > 0) {
      throw InvalidArgumentError("title appears in both classes: " + title);
    }
  }
  manifest.options.classifier.validate();
}

StudyReport run_study(const StudyManifest& manifest, const WikiClient& client) {
  validate_manifest(manifest);

  std::vector<std::pair<std::string, QualityClass>> tasks;
  for (const std::string& title : manifest.featured_titles) {
    tasks.emplace_back(title, QualityClass::Featured);
  }
  for (const std::string& title : manifest.non_assessed_titles) {
    tasks.emplace_back(title, QualityClass::NonAssessed);
  }

  StudyReport report;
  std::mutex report_mutex;
  std::atomic<size_t> next_task{0};
  auto worker = [&] {
    while (true) {
      size_t i = next_task.fetch_add(1);
      if (i >= tasks.size()) break;
      const auto& [title, quality] = tasks[i];
      try {
        std::vector<RevisionRecord> revisions =
            fetch_revisions_cached(client, title, manifest.cache_dir);
        ArticleAnalysis analysis =
            analyze_article(title, quality, revisions, manifest.options);
        std::lock_guard lock(report_mutex);
        report.articles.emplace(title, std::move(analysis));
      } catch (const Error& e) {
        std::lock_guard lock(report_mutex);
        report.errors.emplace(title, std::string(error_code_name(e.code())) + ": " + e.what());
      } catch (const std::exception& e) {
        std::lock_guard lock(report_mutex);
        report.errors.emplace(title, std::string("InternalError: ") + e.what());
      }
    }
  };

  size_t pool_size = std::min<size_t>(
      {tasks.size(), std::max(1u, std::thread::hardware_concurrency()),
       static_cast<size_t>(std::max(1, client.options().max_concurrent_fetches))});
  std::vector<std::thread> threads;
  for (size_t t = 0; t < pool_size; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  std::map<std::string, ClassifiedArticle> classified;
  size_t featured_ok = 0, non_assessed_ok = 0;
  for (const auto& [title, analysis] : report.articles) {
    QualityClass qc = analysis.timeline.quality_class;
    if (qc == QualityClass::Featured) ++featured_ok;
    if (qc == QualityClass::NonAssessed) ++non_assessed_ok;
    classified.emplace(title, ClassifiedArticle{qc, analysis.assignments});
  }
  if (featured_ok == 0 || non_assessed_ok == 0) {
    throw EmptyInputError(std::string("quality class ") +
                          (featured_ok == 0 ? "Featured" : "Non-Assessed") +
                          " ended up empty; cannot compare distributions");
  }

  report.table = build_contingency(classified);
  try {
    report.chi = chi_square_independence(report.table);
  } catch (const DegenerateTableError& e) {
    report.errors.emplace("(statistics)", std::string(error_code_name(e.code())) + ": " + e.what());
  }

  // Output bundle. Articles iterate in sorted order, so every file and every
  // JSON object is laid out deterministically.
  std::error_code ec;
  std::filesystem::create_directories(manifest.output_dir / "charts", ec);
  std::filesystem::create_directories(manifest.output_dir / "personas", ec);
  for (const auto& [title, analysis] : report.articles) {
    std::string stem = percent_encode(title);
    write_text_file(manifest.output_dir / "charts" / (stem + ".svg"),
                    render_oscillation_chart(analysis.timeline, analysis.assignments));
    write_text_file(manifest.output_dir / "personas" / (stem + ".csv"), personas_csv(analysis));
  }
  write_text_file(manifest.output_dir / "contingency.csv",
                  format_contingency_csv(report.table,
                                         report.chi.has_value() ? &*report.chi : nullptr));
  write_text_file(manifest.output_dir / "study.json", study_json(manifest, report));
  return report;
}

}  // namespace wp
