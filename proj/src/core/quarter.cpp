#include "core/quarter.hpp"

#include "core/timeutil.hpp"

namespace wp {

static int floor_div4(int v) {
  return v >= 0 ? v / 4 : -((-v + 3) / 4);
}

QuarterIndex QuarterIndex::from_epoch(int64_t epoch_seconds) {
  CivilDateTime c = civil_from_epoch(epoch_seconds);
  return from_year_quarter(c.year, (c.month + 2) / 3);
}

QuarterIndex QuarterIndex::from_year_quarter(int year, int quarter) {
  return QuarterIndex{(year - 2000) * 4 + (quarter - 1)};
}

int QuarterIndex::year() const {
  return 2000 + floor_div4(value);
}

int QuarterIndex::quarter() const {
  return value - 4 * floor_div4(value) + 1;
}

std::string QuarterIndex::label() const {
  return std::to_string(year()) + "Q" + std::to_string(quarter());
}

}  // namespace wp
