#ifndef WP_CORE_TIMELINE_HPP
#define WP_CORE_TIMELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/quarter.hpp"
#include "core/types.hpp"

namespace wp {

// Per-editor quarterly edit counts over the article's full observed lifetime.
// Every series in one bucketing spans the same quarters; quarters without
// edits hold zero.
struct EditorSeries {
  std::string editor_key;
  std::vector<int64_t> counts;
  int64_t total = 0;

  // Index of the first quarter with at least one edit.
  int first_active_index() const;
};

struct QuarterBuckets {
  QuarterIndex start_quarter;
  std::map<std::string, EditorSeries> by_editor;
};

struct ArticleTimeline {
  std::string article_key;
  QualityClass quality_class = QualityClass::Other;
  QuarterIndex start_quarter;
  // Top editors only, descending total; ties broken by earlier first edit,
  // then lexicographic editor_key.
  std::vector<EditorSeries> series;

  size_t span() const { return series.empty() ? 0 : series.front().counts.size(); }
};

enum class CorrelationMode { Counts, Derivatives };

// Pairwise Pearson correlations between top editors. nullopt marks entries
// where one of the series has zero variance.
struct CorrelationMatrix {
  std::vector<std::string> editor_keys;
  std::vector<std::vector<std::optional<double>>> entries;
};

// Counts revisions per editor per UTC calendar quarter. The span runs from
// the quarter of the earliest revision to the quarter of the latest one.
// Throws EmptyInputError on an empty stream.
QuarterBuckets bucket_by_quarter(std::span<const RevisionRecord> revisions);

// Keeps the top_n series by total. The hidden-editor placeholder never
// qualifies; editors matching /bot$/i are dropped when exclude_bots is set.
ArticleTimeline select_top_editors(const std::string& article_key, QualityClass quality_class,
                                   const QuarterBuckets& buckets, int top_n,
                                   bool exclude_bots = false);

// output[k] = counts[k+1] - counts[k]; a length-1 input yields an empty result.
std::vector<int64_t> derivative_series(std::span<const int64_t> counts);

// Throws TooFewEditorsError below 2 series and TooShortError in Derivatives
// mode when the span is a single quarter.
CorrelationMatrix correlation_matrix(const ArticleTimeline& timeline, CorrelationMode mode);

std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

}  // namespace wp

#endif  // WP_CORE_TIMELINE_HPP
