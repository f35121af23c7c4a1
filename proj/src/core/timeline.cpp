#include "core/timeline.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/strutil.hpp"

namespace wp {

int EditorSeries::first_active_index() const {
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) return static_cast<int>(i);
  }
  return static_cast<int>(counts.size());
}

QuarterBuckets bucket_by_quarter(std::span<const RevisionRecord> revisions) {
  if (revisions.empty()) throw EmptyInputError("no revisions to bucket");

  int first = QuarterIndex::from_epoch(revisions.front().timestamp).value;
  int last = first;
  for (const RevisionRecord& rev : revisions) {
    int q = QuarterIndex::from_epoch(rev.timestamp).value;
    first = std::min(first, q);
    last = std::max(last, q);
  }
  size_t span = static_cast<size_t>(last - first + 1);

  QuarterBuckets buckets;
  buckets.start_quarter = QuarterIndex{first};
  for (const RevisionRecord& rev : revisions) {
    EditorSeries& series = buckets.by_editor[rev.editor_key];
    if (series.counts.empty()) {
      series.editor_key = rev.editor_key;
      series.counts.assign(span, 0);
    }
    size_t q = static_cast<size_t>(QuarterIndex::from_epoch(rev.timestamp).value - first);
    ++series.counts[q];
    ++series.total;
  }
  return buckets;
}

static bool is_bot_name(const std::string& editor_key) {
  return ends_with_ci(editor_key, "bot");
}

ArticleTimeline select_top_editors(const std::string& article_key, QualityClass quality_class,
                                   const QuarterBuckets& buckets, int top_n, bool exclude_bots) {
  if (top_n < 1) throw InvalidArgumentError("top_n must be positive");

  std::vector<const EditorSeries*> candidates;
  candidates.reserve(buckets.by_editor.size());
  for (const auto& [key, series] : buckets.by_editor) {
    if (key == kHiddenEditorKey) continue;
    if (exclude_bots && is_bot_name(key)) continue;
    candidates.push_back(&series);
  }
  std::sort(candidates.begin(), candidates.end(), [](const EditorSeries* a, const EditorSeries* b) {
    if (a->total != b->total) return a->total > b->total;
    int fa = a->first_active_index();
    int fb = b->first_active_index();
    if (fa != fb) return fa < fb;
    return a->editor_key < b->editor_key;
  });
  if (candidates.size() > static_cast<size_t>(top_n)) candidates.resize(top_n);

  ArticleTimeline timeline;
  timeline.article_key = article_key;
  timeline.quality_class = quality_class;
  timeline.start_quarter = buckets.start_quarter;
  timeline.series.reserve(candidates.size());
  for (const EditorSeries* series : candidates) timeline.series.push_back(*series);
  return timeline;
}

std::vector<int64_t> derivative_series(std::span<const int64_t> counts) {
  if (counts.empty()) throw EmptyInputError("derivative of an empty series");
  std::vector<int64_t> deltas;
  deltas.reserve(counts.size() - 1);
  for (size_t k = 0; k + 1 < counts.size(); ++k) deltas.push_back(counts[k + 1] - counts[k]);
  return deltas;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  size_t n = std::min(x.size(), y.size());
  if (n == 0) return std::nullopt;
  double mean_x = 0.0, mean_y = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix correlation_matrix(const ArticleTimeline& timeline, CorrelationMode mode) {
  if (timeline.series.size() < 2) {
    throw TooFewEditorsError("correlation needs at least 2 editors, got " +
                             std::to_string(timeline.series.size()));
  }
  if (mode == CorrelationMode::Derivatives && timeline.span() < 2) {
    throw TooShortError("derivative correlation needs at least 2 quarters");
  }

  size_t n = timeline.series.size();
  std::vector<std::vector<double>> values(n);
  for (size_t i = 0; i < n; ++i) {
    const std::vector<int64_t>& counts = timeline.series[i].counts;
    if (mode == CorrelationMode::Counts) {
      values[i].assign(counts.begin(), counts.end());
    } else {
      for (int64_t d : derivative_series(counts)) values[i].push_back(static_cast<double>(d));
    }
  }

  CorrelationMatrix matrix;
  matrix.editor_keys.reserve(n);
  for (const EditorSeries& series : timeline.series) matrix.editor_keys.push_back(series.editor_key);
  matrix.entries.assign(n, std::vector<std::optional<double>>(n, std::nullopt));
  for (size_t i = 0; i < n; ++i) {
    std::optional<double> self = pearson(values[i], values[i]);
    matrix.entries[i][i] = self.has_value() ? std::optional<double>(1.0) : std::nullopt;
    for (size_t j = i + 1; j < n; ++j) {
      std::optional<double> r = pearson(values[i], values[j]);
      matrix.entries[i][j] = r;
      matrix.entries[j][i] = r;
    }
  }
  return matrix;
}

}  // namespace wp
