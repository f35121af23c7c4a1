#ifndef WP_CORE_TIMEUTIL_HPP
#define WP_CORE_TIMEUTIL_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace wp {

struct CivilDateTime {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;
  int minute = 0;
  int second = 0;
};

// Days since 1970-01-01 of a proleptic Gregorian date.
int64_t days_from_civil(int year, int month, int day);
CivilDateTime civil_from_epoch(int64_t epoch_seconds);

// Strict "YYYY-MM-DDTHH:MM:SSZ". Throws InvalidArgumentError on anything else.
int64_t parse_utc_timestamp(std::string_view s);
std::string format_utc_timestamp(int64_t epoch_seconds);

}  // namespace wp

#endif  // WP_CORE_TIMEUTIL_HPP
