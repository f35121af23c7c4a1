// Command-line front end. Talks to the analysis core exclusively through the
// C API in wikipersona.h.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wikipersona.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitFatal = 2;

struct ContextDeleter {
  void operator()(wp_context* ctx) const { wp_context_free(ctx); }
};
using ContextPtr = std::unique_ptr<wp_context, ContextDeleter>;

std::string owned_string(char* s) {
  if (s == nullptr) return {};
  std::string out(s);
  wp_string_free(s);
  return out;
}

std::string encoded(const std::string& title) {
  return owned_string(wp_encode_title(title.c_str()));
}

void report_error(const wp_context* ctx, wp_status status, const std::string& what) {
  std::cerr << "error: " << what << ": " << wp_status_name(status);
  const char* detail = wp_context_last_error(ctx);
  if (detail != nullptr && *detail != '\0') std::cerr << " (" << detail << ")";
  std::cerr << "\n";
}

bool write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

std::vector<std::string> read_titles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--titles-file", "cannot open " + path);
  std::vector<std::string> titles;
  std::string line;
  while (std::getline(in, line)) {
    size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) continue;
    size_t end = line.find_last_not_of(" \t\r\n");
    std::string title = line.substr(begin, end - begin + 1);
    if (!title.empty() && title[0] != '#') titles.push_back(std::move(title));
  }
  return titles;
}

int cmd_fetch(wp_context* ctx, const std::vector<std::string>& titles, int random_n,
              int64_t min_edits, int64_t min_authors) {
  if (random_n > 0) {
    wp_strings* candidates = nullptr;
    wp_status status = wp_sample_random(ctx, random_n, &candidates);
    if (status != WP_OK) {
      report_error(ctx, status, "random sampling failed");
      return kExitFatal;
    }
    int eligible = 0, failed = 0;
    for (size_t i = 0; i < wp_strings_count(candidates); ++i) {
      std::string title = wp_strings_get(candidates, i);
      int64_t revisions = 0, editors = 0;
      int is_stub = 0;
      status = wp_article_meta(ctx, title.c_str(), &revisions, &editors, &is_stub);
      if (status != WP_OK) {
        ++failed;
        std::cout << "error\t" << title << "\t" << wp_status_name(status) << "\n";
        continue;
      }
      if (wp_passes_eligibility(revisions, editors, is_stub, min_edits, min_authors) != 0) {
        ++eligible;
        std::cout << "eligible\t" << title << "\t" << revisions << " revisions, " << editors
                  << " editors\n";
      } else {
        std::cout << "ineligible\t" << title << "\t" << revisions << " revisions, " << editors
                  << " editors" << (is_stub != 0 ? ", stub" : "") << "\n";
      }
    }
    wp_strings_free(candidates);
    std::cout << eligible << " of " << random_n << " candidates eligible\n";
    return failed == 0 ? kExitOk : (failed < random_n ? kExitPartial : kExitFatal);
  }

  if (titles.empty()) {
    std::cerr << "error: fetch needs titles, --titles-file or --random N\n";
    return kExitFatal;
  }
  int failed = 0;
  for (const std::string& title : titles) {
    int64_t revisions = 0;
    wp_status status = wp_fetch_article(ctx, title.c_str(), &revisions);
    if (status != WP_OK) {
      ++failed;
      report_error(ctx, status, "fetch " + title);
    } else {
      std::cout << title << "\t" << revisions << " revisions\n";
    }
  }
  if (failed == 0) return kExitOk;
  return failed < static_cast<int>(titles.size()) ? kExitPartial : kExitFatal;
}

int cmd_analyze(wp_context* ctx, const std::string& title, const std::string& quality,
                const std::string& out_dir) {
  wp_analysis* analysis = nullptr;
  wp_status status = wp_analyze(ctx, title.c_str(), quality.c_str(), &analysis);
  if (status != WP_OK) {
    report_error(ctx, status, "analyze " + title);
    return kExitFatal;
  }
  for (size_t i = 0; i < wp_analysis_editor_count(analysis); ++i) {
    std::cout << wp_analysis_editor(analysis, i) << "\t" << wp_analysis_persona(analysis, i)
              << "\t" << wp_analysis_rule(analysis, i) << "\n";
  }
  int exit_code = kExitOk;
  if (!out_dir.empty()) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string stem = encoded(title);
    bool ok = write_file(dir / (stem + ".svg"), owned_string(wp_analysis_chart_svg(analysis))) &&
              write_file(dir / (stem + ".csv"), owned_string(wp_analysis_personas_csv(analysis))) &&
              write_file(dir / (stem + ".json"), owned_string(wp_analysis_summary_json(analysis)));
    if (!ok) {
      std::cerr << "error: cannot write analysis files under " << out_dir << "\n";
      exit_code = kExitFatal;
    }
  }
  wp_analysis_free(analysis);
  return exit_code;
}

int cmd_stats(wp_context* ctx, const std::string& csv_path, bool as_json) {
  wp_stats* stats = nullptr;
  wp_status status = wp_stats_load_csv(ctx, csv_path.c_str(), &stats);
  if (status != WP_OK) {
    report_error(ctx, status, "stats " + csv_path);
    return kExitFatal;
  }
  std::cout << owned_string(as_json ? wp_stats_json(stats) : wp_stats_table_csv(stats));
  wp_stats_free(stats);
  return kExitOk;
}

int cmd_study(wp_context* ctx, const std::string& featured, const std::string& na,
              const std::string& out_dir) {
  int64_t skipped = 0;
  wp_status status = wp_run_study(ctx, featured.c_str(), na.c_str(), out_dir.c_str(), &skipped);
  if (status == WP_OK) {
    std::cout << "study complete; bundle written to " << out_dir << "\n";
    return kExitOk;
  }
  if (status == WP_PARTIAL) {
    std::cout << "study complete with " << skipped << " skipped article(s); bundle written to "
              << out_dir << "\n";
    const char* detail = wp_context_last_error(ctx);
    if (detail != nullptr && *detail != '\0') std::cerr << "skipped: " << detail << "\n";
    return kExitPartial;
  }
  report_error(ctx, status, "study");
  return kExitFatal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikipedia editor persona analysis"};
  app.set_version_flag("--version", std::string(wp_version()));
  app.require_subcommand(1);

  std::string api_url, cache_dir, config_file;
  std::vector<std::string> overrides;
  bool exclude_bots = false;
  app.add_option("--api-url", api_url, "MediaWiki Action API endpoint")->envname("WIKI_API_URL");
  app.add_option("--cache-dir", cache_dir, "revision cache directory")->envname("WIKI_CACHE_DIR");
  app.add_option("--config", config_file, "key=value classifier/pipeline config file");
  app.add_option("--set", overrides, "override a single config key (key=value)");
  app.add_flag("--exclude-bots", exclude_bots, "drop editors whose name ends in 'bot'");

  auto* fetch = app.add_subcommand("fetch", "fetch and cache revision histories");
  std::vector<std::string> fetch_titles;
  std::string titles_file;
  int random_n = 0;
  int64_t min_edits = 50, min_authors = 10;
  fetch->add_option("titles", fetch_titles, "article titles");
  fetch->add_option("--titles-file", titles_file, "file with one title per line");
  fetch->add_option("--random", random_n, "sample N random articles and report eligibility");
  fetch->add_option("--min-edits", min_edits, "eligibility: minimum page edits");
  fetch->add_option("--min-authors", min_authors, "eligibility: minimum distinct authors");

  auto* analyze = app.add_subcommand("analyze", "timeline, personas and chart for one article");
  std::string analyze_title, analyze_quality = "other", analyze_out;
  analyze->add_option("title", analyze_title, "article title")->required();
  analyze->add_option("--quality", analyze_quality, "quality class (featured|na|other)");
  analyze->add_option("--out", analyze_out, "directory for svg/csv/json output");

  auto* stats = app.add_subcommand("stats", "chi-square statistics for a contingency CSV");
  std::string stats_csv;
  bool stats_json = false;
  stats->add_option("csv", stats_csv, "contingency CSV file")->required();
  stats->add_flag("--json", stats_json, "print full-precision JSON instead of the table");

  auto* study = app.add_subcommand("study", "full two-class persona study");
  std::string study_featured, study_na, study_out = "study-output";
  study->add_option("--featured", study_featured, "Featured title list file")->required();
  study->add_option("--na", study_na, "Non-Assessed title list file")->required();
  study->add_option("--out", study_out, "output bundle directory");

  CLI11_PARSE(app, argc, argv);

  ContextPtr ctx(wp_context_new());
  if (!ctx) {
    std::cerr << "error: cannot allocate context\n";
    return kExitFatal;
  }
  if (!config_file.empty()) {
    wp_status status = wp_context_load_config(ctx.get(), config_file.c_str());
    if (status != WP_OK) {
      report_error(ctx.get(), status, "loading " + config_file);
      return kExitFatal;
    }
  }
  for (const std::string& kv : overrides) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --set expects key=value, got " << kv << "\n";
      return kExitFatal;
    }
    wp_status status =
        wp_context_set_option(ctx.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (status != WP_OK) {
      report_error(ctx.get(), status, "--set " + kv);
      return kExitFatal;
    }
  }
  if (exclude_bots && wp_context_set_option(ctx.get(), "exclude_bots", "true") != WP_OK) {
    std::cerr << "error: cannot enable bot exclusion\n";
    return kExitFatal;
  }
  if (!api_url.empty() && wp_context_set_api_url(ctx.get(), api_url.c_str()) != WP_OK) {
    std::cerr << "error: bad --api-url\n";
    return kExitFatal;
  }
  if (!cache_dir.empty() && wp_context_set_cache_dir(ctx.get(), cache_dir.c_str()) != WP_OK) {
    std::cerr << "error: bad --cache-dir\n";
    return kExitFatal;
  }

  if (fetch->parsed()) {
    std::vector<std::string> titles = fetch_titles;
    if (!titles_file.empty()) {
      try {
        std::vector<std::string> more = read_titles_file(titles_file);
        titles.insert(titles.end(), more.begin(), more.end());
      } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFatal;
      }
    }
    return cmd_fetch(ctx.get(), titles, random_n, min_edits, min_authors);
  }
  if (analyze->parsed()) return cmd_analyze(ctx.get(), analyze_title, analyze_quality, analyze_out);
  if (stats->parsed()) return cmd_stats(ctx.get(), stats_csv, stats_json);
  if (study->parsed()) return cmd_study(ctx.get(), study_featured, study_na, study_out);
  return kExitFatal;
}
