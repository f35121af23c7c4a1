#ifndef WP_CORE_SVG_HPP
#define WP_CORE_SVG_HPP

#include <string>
#include <vector>

#include "core/personas.hpp"
#include "core/timeline.hpp"

namespace wp {

// Self-contained SVG line chart of quarterly edit volumes: one polyline per
// top editor, a legend naming each editor with its persona, quarter and edit
// count axes. Output is deterministic for a given timeline; it references no
// external resources.
std::string render_oscillation_chart(const ArticleTimeline& timeline,
                                     const std::vector<PersonaAssignment>& assignments);

}  // namespace wp

#endif  // WP_CORE_SVG_HPP
