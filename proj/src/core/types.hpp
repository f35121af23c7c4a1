#ifndef WP_CORE_TYPES_HPP
#define WP_CORE_TYPES_HPP

#include <cstdint>
#include <string>

namespace wp {

// One edit event as reported by the revision API.
struct RevisionRecord {
  std::string article_key;
  int64_t revision_id = 0;
  int64_t timestamp = 0;  // UTC epoch seconds
  std::string editor_key;
};

enum class QualityClass { Featured, NonAssessed, Other };

const char* quality_class_name(QualityClass qc);

// Accepts "featured", "fa", "non-assessed", "na", "other" (case-insensitive).
QualityClass parse_quality_class(const std::string& name);

// Editors whose name the API suppressed. They cannot be told apart, so they
// all share this key and never make it into the top-editor set.
inline constexpr const char* kHiddenEditorKey = "<hidden>";

struct ArticleMeta {
  std::string article_key;
  QualityClass quality_class = QualityClass::Other;
  int64_t revision_count = 0;
  int64_t distinct_editor_count = 0;
  bool is_stub = false;
  int64_t fetched_at = 0;  // UTC epoch seconds
};

}  // namespace wp

#endif  // WP_CORE_TYPES_HPP
