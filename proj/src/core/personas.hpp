#ifndef WP_CORE_PERSONAS_HPP
#define WP_CORE_PERSONAS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/timeline.hpp"

namespace wp {

enum class Persona { Conqueror, Follower, Rebel, Cowboy };

const char* persona_name(Persona p);

struct EditorFeatures {
  std::string editor_key;
  int active_quarters = 0;  // quarters with >= 1 edit
  int span_quarters = 0;    // total series length
  double peak_share = 0.0;  // max quarterly count / total, in (0, 1]
  int onset_quarter = 0;    // index of the first nonzero quarter
  // Quarters in which this editor strictly out-edits every other top editor.
  int dominant_quarters = 0;
  // Fraction of defined pairwise correlations with other top editors that are
  // negative; nullopt when no pair has a defined correlation.
  std::optional<double> negative_corr_fraction;
};

struct PersonaAssignment {
  std::string editor_key;
  Persona persona = Persona::Follower;
  EditorFeatures features;
  std::string rule_fired;  // cowboy_burst | rebel_negative | conqueror_dominant | follower_default
};

struct ClassifierConfig {
  int top_n = 10;
  int cowboy_max_active_quarters = 2;
  double cowboy_peak_share = 0.7;
  // The rebel branch requires negative_corr_fraction strictly greater than this.
  double rebel_negative_fraction = 0.5;
  int conqueror_min_dominant_quarters = 3;
  double sustained_min_active_fraction = 0.25;

  // Flat key=value config file, '#' comments. Unknown keys are an error.
  static ClassifierConfig load_file(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);
  void validate() const;
};

// Feature extraction over the whole timeline. corr may be null (single-editor
// article), which leaves negative_corr_fraction undefined. Throws
// MatrixMismatchError when corr covers a different editor set.
std::vector<EditorFeatures> extract_features(const ArticleTimeline& timeline,
                                             const CorrelationMatrix* corr);

// The ordered decision procedure. Exactly one branch fires:
//   1. cowboy_burst      active_quarters <= cowboy_max_active_quarters
//                        OR peak_share >= cowboy_peak_share
//   2. rebel_negative    negative_corr_fraction defined AND > rebel_negative_fraction
//   3. conqueror_dominant dominant_quarters >= conqueror_min_dominant_quarters
//                        AND active_quarters >= sustained_min_active_fraction * span
//   4. follower_default  everything else
PersonaAssignment classify(const EditorFeatures& features, const ClassifierConfig& config);

// correlation_matrix + extract_features + classify for every top editor.
// Single-editor timelines skip the correlation step.
std::vector<PersonaAssignment> classify_article(const ArticleTimeline& timeline,
                                                const ClassifierConfig& config,
                                                CorrelationMode mode = CorrelationMode::Counts);

}  // namespace wp

#endif  // WP_CORE_PERSONAS_HPP
