#include "core/stats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/igamma.hpp"
#include "core/strutil.hpp"

namespace wp {

ContingencyTable ContingencyTable::from_counts(std::vector<std::string> row_labels,
                                               std::vector<std::string> col_labels,
                                               std::vector<std::vector<int64_t>> counts) {
  if (row_labels.size() != counts.size()) {
    throw InvalidArgumentError("row label count does not match count matrix");
  }
  ContingencyTable table;
  table.row_labels = std::move(row_labels);
  table.col_labels = std::move(col_labels);
  table.counts = std::move(counts);
  table.row_totals.assign(table.counts.size(), 0);
  table.col_totals.assign(table.col_labels.size(), 0);
  for (size_t i = 0; i < table.counts.size(); ++i) {
    if (table.counts[i].size() != table.col_labels.size()) {
      throw InvalidArgumentError("count matrix is not rectangular");
    }
    for (size_t j = 0; j < table.counts[i].size(); ++j) {
      int64_t c = table.counts[i][j];
      if (c < 0) throw InvalidArgumentError("negative cell count");
      table.row_totals[i] += c;
      table.col_totals[j] += c;
      table.grand_total += c;
    }
  }
  return table;
}

ContingencyTable build_contingency(const std::map<std::string, ClassifiedArticle>& articles) {
  static const Persona kPersonaOrder[] = {Persona::Conqueror, Persona::Follower, Persona::Rebel,
                                          Persona::Cowboy};
  std::vector<std::vector<int64_t>> counts(2, std::vector<int64_t>(4, 0));
  for (const auto& [article_key, article] : articles) {
    size_t row;
    switch (article.quality_class) {
      case QualityClass::Featured: row = 0; break;
      case QualityClass::NonAssessed: row = 1; break;
      default:
        throw UnknownQualityClassError("article " + article_key +
                                       " has quality class Other; filter it out first");
    }
    for (const PersonaAssignment& assignment : article.assignments) {
      for (size_t j = 0; j < 4; ++j) {
        if (assignment.persona == kPersonaOrder[j]) {
          ++counts[row][j];
          break;
        }
      }
    }
  }
  std::vector<std::string> col_labels;
  for (Persona p : kPersonaOrder) col_labels.emplace_back(persona_name(p));
  return ContingencyTable::from_counts(
      {quality_class_name(QualityClass::Featured), quality_class_name(QualityClass::NonAssessed)},
      std::move(col_labels), std::move(counts));
}

static void check_testable(const ContingencyTable& table) {
  if (table.grand_total < 1) throw DegenerateTableError("empty contingency table");
  if (table.row_labels.size() < 2 || table.col_labels.size() < 2) {
    throw DegenerateTableError("chi-square needs at least a 2x2 table");
  }
  for (size_t i = 0; i < table.row_totals.size(); ++i) {
    if (table.row_totals[i] == 0) {
      throw DegenerateTableError("zero row total for " + table.row_labels[i] +
                                 "; drop that category");
    }
  }
  for (size_t j = 0; j < table.col_totals.size(); ++j) {
    if (table.col_totals[j] == 0) {
      throw DegenerateTableError("zero column total for " + table.col_labels[j] +
                                 "; drop that category");
    }
  }
}

static std::vector<std::vector<double>> expected_counts(const ContingencyTable& table) {
  size_t rows = table.row_labels.size();
  size_t cols = table.col_labels.size();
  std::vector<std::vector<double>> expected(rows, std::vector<double>(cols, 0.0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      expected[i][j] = static_cast<double>(table.row_totals[i]) *
                       static_cast<double>(table.col_totals[j]) /
                       static_cast<double>(table.grand_total);
    }
  }
  return expected;
}

std::vector<std::vector<double>> standardized_residuals(const ContingencyTable& table) {
  check_testable(table);
  std::vector<std::vector<double>> expected = expected_counts(table);
  std::vector<std::vector<double>> residuals = expected;
  for (size_t i = 0; i < residuals.size(); ++i) {
    for (size_t j = 0; j < residuals[i].size(); ++j) {
      residuals[i][j] =
          (static_cast<double>(table.counts[i][j]) - expected[i][j]) / std::sqrt(expected[i][j]);
    }
  }
  return residuals;
}

std::vector<std::vector<double>> percent_distribution(const ContingencyTable& table) {
  size_t rows = table.row_labels.size();
  size_t cols = table.col_labels.size();
  std::vector<std::vector<double>> percents(rows, std::vector<double>(cols, 0.0));
  for (size_t i = 0; i < rows; ++i) {
    if (table.row_totals[i] == 0) {
      throw DegenerateTableError("zero row total for " + table.row_labels[i]);
    }
    for (size_t j = 0; j < cols; ++j) {
      percents[i][j] = 100.0 * static_cast<double>(table.counts[i][j]) /
                       static_cast<double>(table.row_totals[i]);
    }
  }
  return percents;
}

ChiSquareResult chi_square_independence(const ContingencyTable& table) {
  check_testable(table);
  ChiSquareResult result;
  result.expected = expected_counts(table);
  result.std_residuals = standardized_residuals(table);
  result.percent_rows = percent_distribution(table);
  result.statistic = 0.0;
  for (size_t i = 0; i < table.row_labels.size(); ++i) {
    for (size_t j = 0; j < table.col_labels.size(); ++j) {
      double diff = static_cast<double>(table.counts[i][j]) - result.expected[i][j];
      result.statistic += diff * diff / result.expected[i][j];
    }
  }
  result.df = static_cast<int>((table.row_labels.size() - 1) * (table.col_labels.size() - 1));
  result.p_value = chi_square_survival(result.statistic, result.df);
  return result;
}

static bool parse_count(const std::string& field, int64_t& out) {
  std::string_view sv = trim(field);
  if (sv.empty()) return false;
  int64_t value = 0;
  for (char c : sv) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

ContingencyTable parse_contingency_csv(const std::string& text, const std::string& source_name) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty()) throw IoError(source_name + ": empty contingency CSV");

  std::vector<std::string> header = csv_split(lines[0]);
  if (header.size() < 2) throw IoError(source_name + ": contingency header needs persona columns");
  std::vector<std::string> col_labels(header.begin() + 1, header.end());
  if (!col_labels.empty() && trim(col_labels.back()) == "Total") col_labels.pop_back();
  if (col_labels.empty()) throw IoError(source_name + ": contingency header needs persona columns");

  std::vector<std::string> row_labels;
  std::vector<std::vector<int64_t>> counts;
  for (size_t li = 1; li < lines.size(); ++li) {
    std::vector<std::string> fields = csv_split(lines[li]);
    bool all_empty = true;
    for (const std::string& f : fields) {
      if (!trim(f).empty()) all_empty = false;
    }
    if (all_empty) continue;
    std::string label(trim(fields[0]));
    // Count rows end at the totals row or at a section row of the full layout.
    if (label == "Total" || label == "Chi-Square" || (!label.empty() && label.back() == ':')) break;
    if (label.empty()) throw IoError(source_name + ": count row without a class label");
    if (fields.size() < 1 + col_labels.size()) {
      throw IoError(source_name + ": count row for " + label + " is too short");
    }
    std::vector<int64_t> row;
    for (size_t j = 0; j < col_labels.size(); ++j) {
      int64_t value = 0;
      if (!parse_count(fields[1 + j], value)) {
        throw IoError(source_name + ": cell (" + label + ", " + col_labels[j] +
                      ") is not a non-negative integer");
      }
      row.push_back(value);
    }
    row_labels.push_back(label);
    counts.push_back(std::move(row));
  }
  if (row_labels.empty()) throw IoError(source_name + ": no count rows found");
  return ContingencyTable::from_counts(std::move(row_labels), std::move(col_labels),
                                       std::move(counts));
}

ContingencyTable load_contingency_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_contingency_csv(buf.str(), path.string());
}

static std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string format_contingency_csv(const ContingencyTable& table, const ChiSquareResult* result) {
  size_t cols = table.col_labels.size();
  std::string out;
  out += "class";
  for (const std::string& label : table.col_labels) out += "," + csv_field(label);
  out += ",Total\n";
  for (size_t i = 0; i < table.row_labels.size(); ++i) {
    out += csv_field(table.row_labels[i]);
    for (size_t j = 0; j < cols; ++j) out += "," + std::to_string(table.counts[i][j]);
    out += "," + std::to_string(table.row_totals[i]) + "\n";
  }
  out += "Total";
  for (size_t j = 0; j < cols; ++j) out += "," + std::to_string(table.col_totals[j]);
  out += "," + std::to_string(table.grand_total) + "\n";
  if (result == nullptr) return out;
  // Statistics printed the way the study tables present them: statistic to
  // 2 decimals, p-value to 6.
  out += "Chi-Square," + fixed(result->statistic, 2) + ",df," + std::to_string(result->df) +
         ",p-value," + fixed(result->p_value, 6) + "\n";
  out += "Percentage distribution:\n";
  for (size_t i = 0; i < table.row_labels.size(); ++i) {
    out += csv_field(table.row_labels[i]);
    double row_sum = 0.0;
    for (size_t j = 0; j < cols; ++j) {
      out += "," + fixed(result->percent_rows[i][j], 1);
      row_sum += result->percent_rows[i][j];
    }
    out += "," + fixed(row_sum, 1) + "\n";
  }
  out += "Standardized residuals:\n";
  for (size_t i = 0; i < table.row_labels.size(); ++i) {
    out += csv_field(table.row_labels[i]);
    for (size_t j = 0; j < cols; ++j) out += "," + fixed(result->std_residuals[i][j], 2);
    out += "\n";
  }
  return out;
}

}  // namespace wp
