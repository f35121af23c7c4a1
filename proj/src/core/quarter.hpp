#ifndef WP_CORE_QUARTER_HPP
#define WP_CORE_QUARTER_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace wp {

// A UTC calendar quarter, encoded as (year - 2000) * 4 + (quarter - 1) so that
// integer ordering matches chronological ordering.
struct QuarterIndex {
  int value = 0;

  static QuarterIndex from_epoch(int64_t epoch_seconds);
  static QuarterIndex from_year_quarter(int year, int quarter);

  int year() const;
  int quarter() const;          // 1..4
  std::string label() const;    // e.g. "2005Q1"
  QuarterIndex next(int steps = 1) const { return QuarterIndex{value + steps}; }

  auto operator<=>(const QuarterIndex&) const = default;
};

}  // namespace wp

#endif  // WP_CORE_QUARTER_HPP
