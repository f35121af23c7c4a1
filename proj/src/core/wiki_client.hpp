#ifndef WP_CORE_WIKI_CLIENT_HPP
#define WP_CORE_WIKI_CLIENT_HPP

#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/types.hpp"

namespace wp {

struct WikiClientOptions {
  // Action API endpoint; must include the script path.
  std::string api_url = "https://en.wikipedia.org/w/api.php";
  std::string user_agent = "wikipersona/0.1 (co-editing analysis; contact: local)";
  // Additional attempts after the first, on transport errors and HTTP 429/5xx,
  // backing off base * 2^k (1 s, 2 s, 4 s with the defaults).
  int max_retries = 3;
  int retry_base_delay_ms = 1000;
  // Bound on article fetches in flight across threads sharing this client.
  // Continuation requests within one fetch are strictly sequential.
  int max_concurrent_fetches = 2;
  int timeout_seconds = 30;
};

// Read-only MediaWiki Action API client. Thread-safe; every public call may
// be issued from any thread.
class WikiClient {
 public:
  explicit WikiClient(WikiClientOptions options = {});

  // Complete revision history (all continuation pages), sorted ascending by
  // (timestamp, revision_id). Throws NotFoundError for missing or invalid
  // titles, NetworkError when transport keeps failing, ApiError on responses
  // that do not parse as expected.
  std::vector<RevisionRecord> fetch_revisions(const std::string& title) const;

  // Wikitext of the latest revision plus its size in bytes.
  std::string latest_wikitext(const std::string& title, int64_t* byte_size = nullptr) const;

  // n distinct main-namespace titles from the random-article facility.
  std::vector<std::string> random_titles(int n) const;

  const WikiClientOptions& options() const { return options_; }

 private:
  class FetchSlot;
  nlohmann::json api_get(const std::vector<std::pair<std::string, std::string>>& params) const;

  WikiClientOptions options_;
  std::string scheme_host_;
  std::string api_path_;

  mutable std::mutex slots_mutex_;
  mutable std::condition_variable slots_cv_;
  mutable int free_slots_ = 0;
};

}  // namespace wp

#endif  // WP_CORE_WIKI_CLIENT_HPP
