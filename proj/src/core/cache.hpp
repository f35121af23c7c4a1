#ifndef WP_CORE_CACHE_HPP
#define WP_CORE_CACHE_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace wp {

// Revision histories are cached as one JSON Lines file per article:
// <cache_dir>/<percent-encoded title>.jsonl, one RevisionRecord per line with
// keys article_key, revision_id, timestamp (ISO-8601 Zulu), editor_key, lines
// sorted ascending by (timestamp, revision_id). The byte layout is stable so
// repeated writes of the same records are identical.

std::filesystem::path revision_cache_path(const std::filesystem::path& cache_dir,
                                          const std::string& article_key);

std::string serialize_revisions(std::span<const RevisionRecord> revisions);
std::vector<RevisionRecord> deserialize_revisions(const std::string& text,
                                                  const std::string& source_name);

// Write-temp-then-rename, so readers never observe a partial file.
void write_revision_cache(const std::filesystem::path& cache_dir, const std::string& article_key,
                          std::span<const RevisionRecord> revisions);

// nullopt when the article has no cache entry.
std::optional<std::vector<RevisionRecord>> read_revision_cache(
    const std::filesystem::path& cache_dir, const std::string& article_key);

}  // namespace wp

#endif  // WP_CORE_CACHE_HPP
