#include "core/types.hpp"

#include "core/errors.hpp"
#include "core/strutil.hpp"

namespace wp {

const char* quality_class_name(QualityClass qc) {
  switch (qc) {
    case QualityClass::Featured: return "Featured";
    case QualityClass::NonAssessed: return "Non-Assessed";
    case QualityClass::Other: return "Other";
  }
  return "Other";
}

QualityClass parse_quality_class(const std::string& name) {
  std::string lower = to_lower(name);
  if (lower == "featured" || lower == "fa") return QualityClass::Featured;
  if (lower == "non-assessed" || lower == "nonassessed" || lower == "na") {
    return QualityClass::NonAssessed;
  }
  if (lower == "other") return QualityClass::Other;
  throw InvalidArgumentError("unknown quality class: " + name);
}

}  // namespace wp
