#ifndef WP_CORE_INGEST_HPP
#define WP_CORE_INGEST_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "core/types.hpp"
#include "core/wiki_client.hpp"

namespace wp {

// Cache-aware revision fetch: a cache hit never touches the network; a miss
// fetches the full history and refreshes the cache atomically.
std::vector<RevisionRecord> fetch_revisions_cached(const WikiClient& client,
                                                   const std::string& title,
                                                   const std::filesystem::path& cache_dir);

// Not a stub AND revision_count >= min_edits AND distinct_editor_count >= min_authors.
bool passes_eligibility(const ArticleMeta& meta, int64_t min_edits = 50, int64_t min_authors = 10);

// A stub is flagged by a template whose name ends in "stub" (case-insensitive)
// or by the latest revision being under min_bytes.
bool is_stub_wikitext(std::string_view wikitext, int64_t byte_size, int64_t min_bytes = 1500);

struct MetaOptions {
  QualityClass quality_class = QualityClass::Other;
  int64_t stub_min_bytes = 1500;
};

// Revision-count/editor-count/stub facts for one article; uses the revision
// cache and one extra request for the latest wikitext.
ArticleMeta fetch_article_meta(const WikiClient& client, const std::string& title,
                               const std::filesystem::path& cache_dir,
                               const MetaOptions& options = {});

std::vector<std::string> sample_random_candidates(const WikiClient& client, int n);

// One title per line, UTF-8, '#' comment lines and blank lines skipped.
std::vector<std::string> read_title_list(const std::filesystem::path& path);

}  // namespace wp

#endif  // WP_CORE_INGEST_HPP
