#include "core/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "core/strutil.hpp"

namespace wp {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 710.0;
constexpr double kTop = 48.0;
constexpr double kBottom = 424.0;
constexpr double kLegendX = 734.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

int64_t nice_step(int64_t range, int target_ticks) {
  int64_t rough = std::max<int64_t>(1, range / std::max(1, target_ticks));
  int64_t magnitude = 1;
  while (magnitude * 10 <= rough) magnitude *= 10;
  for (int64_t mult : {1, 2, 5, 10}) {
    if (magnitude * mult >= rough) return magnitude * mult;
  }
  return magnitude * 10;
}

}  // namespace

std::string render_oscillation_chart(const ArticleTimeline& timeline,
                                     const std::vector<PersonaAssignment>& assignments) {
  size_t span = timeline.span();
  int64_t ymax = 1;
  for (const EditorSeries& series : timeline.series) {
    for (int64_t c : series.counts) ymax = std::max(ymax, c);
  }

  auto x_of = [&](size_t q) {
    if (span <= 1) return (kLeft + kRight) / 2.0;
    return kLeft + static_cast<double>(q) * (kRight - kLeft) / static_cast<double>(span - 1);
  };
  auto y_of = [&](int64_t c) {
    return kBottom - static_cast<double>(c) * (kBottom - kTop) / static_cast<double>(ymax);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num((kLeft + kRight) / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         xml_escape(timeline.article_key) + "</text>\n";

  // Axes.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
         "\" y2=\"" + num(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 10) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">quarter</text>\n";
  svg += "<text x=\"16\" y=\"" + num((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " +
         num((kTop + kBottom) / 2) + ")\">edits per quarter</text>\n";

  // X ticks with quarter labels.
  size_t x_step = std::max<size_t>(1, (span + 7) / 8);
  for (size_t q = 0; q < span; q += x_step) {
    double x = x_of(q);
    svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) + "\" y2=\"" +
           num(kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
           xml_escape(timeline.start_quarter.next(static_cast<int>(q)).label()) + "</text>\n";
  }

  // Y ticks.
  int64_t y_step = nice_step(ymax, 5);
  for (int64_t c = 0; c <= ymax; c += y_step) {
    double y = y_of(c);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 3) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
           std::to_string(c) + "</text>\n";
  }

  // One polyline per top editor.
  for (size_t i = 0; i < timeline.series.size(); ++i) {
    const EditorSeries& series = timeline.series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string points;
    for (size_t q = 0; q < series.counts.size(); ++q) {
      if (!points.empty()) points += " ";
      points += num(x_of(q)) + "," + num(y_of(series.counts[q]));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  }

  // Legend: editor name with its assigned persona.
  for (size_t i = 0; i < timeline.series.size(); ++i) {
    const EditorSeries& series = timeline.series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    double y = kTop + 8.0 + static_cast<double>(i) * 20.0;
    std::string label = series.editor_key;
    for (const PersonaAssignment& assignment : assignments) {
      if (assignment.editor_key == series.editor_key) {
        label += " (";
        label += persona_name(assignment.persona);
        label += ")";
        break;
      }
    }
    svg += "<line x1=\"" + num(kLegendX) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLegendX + 22) +
           "\" y2=\"" + num(y) + "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(kLegendX + 28) + "\" y=\"" + num(y + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(label) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace wp
