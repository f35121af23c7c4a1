#ifndef WP_CORE_STATS_HPP
#define WP_CORE_STATS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "core/personas.hpp"
#include "core/types.hpp"

namespace wp {

struct ContingencyTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<int64_t>> counts;
  std::vector<int64_t> row_totals;
  std::vector<int64_t> col_totals;
  int64_t grand_total = 0;

  // Validates a rectangular non-negative matrix and derives the totals.
  static ContingencyTable from_counts(std::vector<std::string> row_labels,
                                      std::vector<std::string> col_labels,
                                      std::vector<std::vector<int64_t>> counts);
};

struct ChiSquareResult {
  double statistic = 0.0;
  int df = 0;
  double p_value = 1.0;
  std::vector<std::vector<double>> expected;
  std::vector<std::vector<double>> std_residuals;
  std::vector<std::vector<double>> percent_rows;
};

struct ClassifiedArticle {
  QualityClass quality_class = QualityClass::Other;
  std::vector<PersonaAssignment> assignments;
};

// Tallies (article, editor) persona assignments into a quality-class x persona
// table. Rows: Featured, Non-Assessed; columns: Conqueror, Follower, Rebel,
// Cowboy. Articles of class Other must be filtered out by the caller first.
ContingencyTable build_contingency(const std::map<std::string, ClassifiedArticle>& articles);

// Pearson chi-square test of independence with standardized residuals
// (O - E) / sqrt(E) and row percentage distributions. Throws
// DegenerateTableError when the table has a zero row/column total or fewer
// than two rows or columns.
ChiSquareResult chi_square_independence(const ContingencyTable& table);

std::vector<std::vector<double>> standardized_residuals(const ContingencyTable& table);

// cell = 100 * count / row_total. Throws DegenerateTableError on a zero row.
std::vector<std::vector<double>> percent_distribution(const ContingencyTable& table);

// CSV interchange. The reader accepts both a bare count table (header row of
// persona names, one class per row) and the full report layout written by
// format_contingency_csv; count rows end at the first "Total" or section row.
ContingencyTable parse_contingency_csv(const std::string& text, const std::string& source_name);
ContingencyTable load_contingency_csv(const std::filesystem::path& path);
// result may be null; the CSV then stops after the totals row.
std::string format_contingency_csv(const ContingencyTable& table,
                                   const ChiSquareResult* result = nullptr);

}  // namespace wp

#endif  // WP_CORE_STATS_HPP
