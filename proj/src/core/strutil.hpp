#ifndef WP_CORE_STRUTIL_HPP
#define WP_CORE_STRUTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace wp {

// RFC 3986 percent-encoding of everything outside the unreserved set.
// Used for cache file names and output file names derived from titles.
std::string percent_encode(std::string_view s);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
bool ends_with_ci(std::string_view s, std::string_view suffix);

// Minimal RFC 4180 CSV. Fields containing comma, quote or newline get quoted.
std::string csv_field(std::string_view s);
std::vector<std::string> csv_split(std::string_view line);

std::string xml_escape(std::string_view s);

}  // namespace wp

#endif  // WP_CORE_STRUTIL_HPP
