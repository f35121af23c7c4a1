#include "core/personas.hpp"

#include <algorithm>
#include <fstream>

#include "core/errors.hpp"
#include "core/strutil.hpp"

namespace wp {

const char* persona_name(Persona p) {
  switch (p) {
    case Persona::Conqueror: return "Conqueror";
    case Persona::Follower: return "Follower";
    case Persona::Rebel: return "Rebel";
    case Persona::Cowboy: return "Cowboy";
  }
  return "Follower";
}

static int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config key " + key + ": not an integer: " + value);
  }
}

static double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config key " + key + ": not a number: " + value);
  }
}

void ClassifierConfig::set(const std::string& key, const std::string& value) {
  if (key == "top_n") top_n = parse_int(key, value);
  else if (key == "cowboy_max_active_quarters") cowboy_max_active_quarters = parse_int(key, value);
  else if (key == "cowboy_peak_share") cowboy_peak_share = parse_double(key, value);
  else if (key == "rebel_negative_fraction") rebel_negative_fraction = parse_double(key, value);
  else if (key == "conqueror_min_dominant_quarters")
    conqueror_min_dominant_quarters = parse_int(key, value);
  else if (key == "sustained_min_active_fraction")
    sustained_min_active_fraction = parse_double(key, value);
  else throw InvalidArgumentError("unknown classifier config key: " + key);
}

void ClassifierConfig::validate() const {
  // cowboy_max_active_quarters = 0 and cowboy_peak_share > 1 are legal: they
  // disable the burst branch.
  if (top_n < 1) throw InvalidArgumentError("top_n must be >= 1");
  if (cowboy_max_active_quarters < 0)
    throw InvalidArgumentError("cowboy_max_active_quarters must be >= 0");
  if (!(cowboy_peak_share > 0.0)) throw InvalidArgumentError("cowboy_peak_share must be > 0");
  if (!(rebel_negative_fraction > 0.0))
    throw InvalidArgumentError("rebel_negative_fraction must be > 0");
  if (conqueror_min_dominant_quarters < 1)
    throw InvalidArgumentError("conqueror_min_dominant_quarters must be >= 1");
  if (!(sustained_min_active_fraction > 0.0) || sustained_min_active_fraction > 1.0)
    throw InvalidArgumentError("sustained_min_active_fraction must be in (0, 1]");
}

ClassifierConfig ClassifierConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  ClassifierConfig config;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    size_t eq = sv.find('=');
    if (eq == std::string_view::npos) {
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key(trim(sv.substr(0, eq)));
    std::string value(trim(sv.substr(eq + 1)));
    config.set(key, value);
  }
  config.validate();
  return config;
}

std::vector<EditorFeatures> extract_features(const ArticleTimeline& timeline,
                                             const CorrelationMatrix* corr) {
  size_t n = timeline.series.size();
  if (corr != nullptr) {
    bool same = corr->editor_keys.size() == n;
    for (size_t i = 0; same && i < n; ++i) {
      same = corr->editor_keys[i] == timeline.series[i].editor_key;
    }
    if (!same) throw MatrixMismatchError("correlation matrix does not match timeline editors");
  }

  std::vector<EditorFeatures> features;
  features.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const EditorSeries& series = timeline.series[i];
    EditorFeatures f;
    f.editor_key = series.editor_key;
    f.span_quarters = static_cast<int>(series.counts.size());
    int64_t peak = 0;
    for (size_t q = 0; q < series.counts.size(); ++q) {
      int64_t c = series.counts[q];
      if (c > 0) ++f.active_quarters;
      peak = std::max(peak, c);
    }
    f.peak_share = series.total > 0
                       ? static_cast<double>(peak) / static_cast<double>(series.total)
                       : 0.0;
    f.onset_quarter = series.first_active_index();
    for (size_t q = 0; q < series.counts.size(); ++q) {
      bool strict_max = true;
      for (size_t j = 0; j < n && strict_max; ++j) {
        if (j != i && timeline.series[j].counts[q] >= series.counts[q]) strict_max = false;
      }
      if (strict_max) ++f.dominant_quarters;
    }
    if (corr != nullptr) {
      int defined = 0;
      int negative = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::optional<double>& r = corr->entries[i][j];
        if (!r.has_value()) continue;
        ++defined;
        if (*r < 0.0) ++negative;
      }
      if (defined > 0) {
        f.negative_corr_fraction = static_cast<double>(negative) / static_cast<double>(defined);
      }
    }
    features.push_back(std::move(f));
  }
  return features;
}

PersonaAssignment classify(const EditorFeatures& features, const ClassifierConfig& config) {
  PersonaAssignment assignment;
  assignment.editor_key = features.editor_key;
  assignment.features = features;
  if (features.active_quarters <= config.cowboy_max_active_quarters ||
      features.peak_share >= config.cowboy_peak_share) {
    assignment.persona = Persona::Cowboy;
    assignment.rule_fired = "cowboy_burst";
  } else if (features.negative_corr_fraction.has_value() &&
             *features.negative_corr_fraction > config.rebel_negative_fraction) {
    assignment.persona = Persona::Rebel;
    assignment.rule_fired = "rebel_negative";
  } else if (features.dominant_quarters >= config.conqueror_min_dominant_quarters &&
             features.active_quarters >=
                 config.sustained_min_active_fraction * features.span_quarters) {
    assignment.persona = Persona::Conqueror;
    assignment.rule_fired = "conqueror_dominant";
  } else {
    assignment.persona = Persona::Follower;
    assignment.rule_fired = "follower_default";
  }
  return assignment;
}

std::vector<PersonaAssignment> classify_article(const ArticleTimeline& timeline,
                                                const ClassifierConfig& config,
                                                CorrelationMode mode) {
  std::vector<PersonaAssignment> assignments;
  if (timeline.series.empty()) return assignments;

  std::optional<CorrelationMatrix> corr;
  if (timeline.series.size() >= 2) corr = correlation_matrix(timeline, mode);
  std::vector<EditorFeatures> features =
      extract_features(timeline, corr.has_value() ? &*corr : nullptr);
  assignments.reserve(features.size());
  for (const EditorFeatures& f : features) assignments.push_back(classify(f, config));
  return assignments;
}

}  // namespace wp
