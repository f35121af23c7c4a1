#include "core/ingest.hpp"

#include <chrono>
#include <fstream>
#include <set>

#include "core/cache.hpp"
#include "core/errors.hpp"
#include "core/strutil.hpp"

namespace wp {

std::vector<RevisionRecord> fetch_revisions_cached(const WikiClient& client,
                                                   const std::string& title,
                                                   const std::filesystem::path& cache_dir) {
  if (title.empty()) throw InvalidArgumentError("article title must be non-empty");
  if (auto cached = read_revision_cache(cache_dir, title)) return std::move(*cached);
  std::vector<RevisionRecord> revisions = client.fetch_revisions(title);
  write_revision_cache(cache_dir, title, revisions);
  return revisions;
}

bool passes_eligibility(const ArticleMeta& meta, int64_t min_edits, int64_t min_authors) {
  return !meta.is_stub && meta.revision_count >= min_edits &&
         meta.distinct_editor_count >= min_authors;
}

bool is_stub_wikitext(std::string_view wikitext, int64_t byte_size, int64_t min_bytes) {
  if (byte_size < min_bytes) return true;
  size_t pos = 0;
  while ((pos = wikitext.find("{{", pos)) != std::string_view::npos) {
    pos += 2;
    size_t end = wikitext.find_first_of("|}\n", pos);
    if (end == std::string_view::npos) break;
    std::string_view name = trim(wikitext.substr(pos, end - pos));
    if (ends_with_ci(name, "stub")) return true;
  }
  return false;
}

ArticleMeta fetch_article_meta(const WikiClient& client, const std::string& title,
                               const std::filesystem::path& cache_dir,
                               const MetaOptions& options) {
  std::vector<RevisionRecord> revisions = fetch_revisions_cached(client, title, cache_dir);

  ArticleMeta meta;
  meta.article_key = revisions.empty() ? title : revisions.front().article_key;
  meta.quality_class = options.quality_class;
  meta.revision_count = static_cast<int64_t>(revisions.size());
  std::set<std::string> editors;
  for (const RevisionRecord& rev : revisions) editors.insert(rev.editor_key);
  meta.distinct_editor_count = static_cast<int64_t>(editors.size());

  int64_t byte_size = 0;
  std::string wikitext = client.latest_wikitext(title, &byte_size);
  meta.is_stub = is_stub_wikitext(wikitext, byte_size, options.stub_min_bytes);
  meta.fetched_at = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count();
  return meta;
}

std::vector<std::string> sample_random_candidates(const WikiClient& client, int n) {
  if (n < 1) throw InvalidArgumentError("sample size must be >= 1");
  return client.random_titles(n);
}

std::vector<std::string> read_title_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open title list " + path.string());
  std::vector<std::string> titles;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    titles.emplace_back(sv);
  }
  return titles;
}

}  // namespace wp
