#include "core/wiki_client.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include <httplib.h>

#include "core/errors.hpp"
#include "core/timeutil.hpp"

namespace wp {

class WikiClient::FetchSlot {
 public:
  explicit FetchSlot(const WikiClient& client) : client_(client) {
    std::unique_lock lock(client_.slots_mutex_);
    client_.slots_cv_.wait(lock, [&] { return client_.free_slots_ > 0; });
    --client_.free_slots_;
  }
  ~FetchSlot() {
    {
      std::lock_guard lock(client_.slots_mutex_);
      ++client_.free_slots_;
    }
    client_.slots_cv_.notify_one();
  }
  FetchSlot(const FetchSlot&) = delete;
  FetchSlot& operator=(const FetchSlot&) = delete;

 private:
  const WikiClient& client_;
};

WikiClient::WikiClient(WikiClientOptions options) : options_(std::move(options)) {
  const std::string& url = options_.api_url;
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw InvalidArgumentError("api url must start with http:// or https://: " + url);
  }
  size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    throw InvalidArgumentError("api url must include the script path: " + url);
  }
  scheme_host_ = url.substr(0, path_start);
  api_path_ = url.substr(path_start);
  free_slots_ = std::max(1, options_.max_concurrent_fetches);
}

nlohmann::json WikiClient::api_get(
    const std::vector<std::pair<std::string, std::string>>& params) const {
  httplib::Params query;
  for (const auto& [key, value] : params) query.emplace(key, value);
  httplib::Headers headers = {{"User-Agent", options_.user_agent}};

  std::string last_failure;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(static_cast<int64_t>(options_.retry_base_delay_ms)
                                    << (attempt - 1)));
    }
    httplib::Client cli(scheme_host_);
    cli.set_connection_timeout(options_.timeout_seconds, 0);
    cli.set_read_timeout(options_.timeout_seconds, 0);
    cli.set_follow_location(true);
    httplib::Result res = cli.Get(api_path_, query, headers);
    if (!res) {
      last_failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_failure = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw ApiError("unexpected HTTP " + std::to_string(res->status) + " from " + scheme_host_);
    }
    nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
      throw ApiError("malformed API response from " + scheme_host_);
    }
    if (body.contains("error")) {
      const nlohmann::json& err = body["error"];
      throw ApiError("API error " + err.value("code", std::string("unknown")) + ": " +
                     err.value("info", std::string()));
    }
    return body;
  }
  throw NetworkError("request to " + scheme_host_ + " failed after " +
                     std::to_string(options_.max_retries + 1) + " attempts: " + last_failure);
}

static const nlohmann::json& single_page(const nlohmann::json& body, const std::string& title) {
  if (!body.contains("query") || !body["query"].contains("pages") ||
      !body["query"]["pages"].is_array() || body["query"]["pages"].empty()) {
    throw ApiError("API response has no pages for title " + title);
  }
  const nlohmann::json& page = body["query"]["pages"][0];
  if (page.value("missing", false)) throw NotFoundError("page does not exist: " + title);
  if (page.value("invalid", false)) throw NotFoundError("invalid title: " + title);
  return page;
}

std::vector<RevisionRecord> WikiClient::fetch_revisions(const std::string& title) const {
  if (title.empty()) throw InvalidArgumentError("article title must be non-empty");
  FetchSlot slot(*this);

  const std::vector<std::pair<std::string, std::string>> base = {
      {"action", "query"},   {"format", "json"},         {"formatversion", "2"},
      {"prop", "revisions"}, {"rvprop", "ids|timestamp|user"}, {"rvlimit", "max"},
      {"rvdir", "newer"},    {"titles", title},
  };

  std::vector<RevisionRecord> revisions;
  std::vector<std::pair<std::string, std::string>> continuation;
  while (true) {
    std::vector<std::pair<std::string, std::string>> params = base;
    params.insert(params.end(), continuation.begin(), continuation.end());
    nlohmann::json body = api_get(params);
    try {
      const nlohmann::json& page = single_page(body, title);
      std::string article_key = page.value("title", title);
      if (page.contains("revisions")) {
        for (const nlohmann::json& rev : page["revisions"]) {
          RevisionRecord record;
          record.article_key = article_key;
          if (!rev.contains("revid") || !rev["revid"].is_number_integer() ||
              !rev.contains("timestamp")) {
            throw ApiError("revision without ids/timestamp for " + title);
          }
          record.revision_id = rev["revid"].get<int64_t>();
          try {
            record.timestamp = parse_utc_timestamp(rev["timestamp"].get<std::string>());
          } catch (const Error&) {
            throw ApiError("unparseable revision timestamp for " + title);
          }
          record.editor_key =
              rev.value("userhidden", false) ? kHiddenEditorKey : rev.value("user", std::string());
          if (record.editor_key.empty()) record.editor_key = kHiddenEditorKey;
          revisions.push_back(std::move(record));
        }
      }
      if (!body.contains("continue")) break;
      continuation.clear();
      for (const auto& [key, value] : body["continue"].items()) {
        continuation.emplace_back(key,
                                  value.is_string() ? value.get<std::string>() : value.dump());
      }
    } catch (const nlohmann::json::exception&) {
      throw ApiError("malformed revision payload for " + title);
    }
  }

  std::sort(revisions.begin(), revisions.end(), [](const RevisionRecord& a, const RevisionRecord& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.revision_id < b.revision_id;
  });
  for (size_t i = 1; i < revisions.size(); ++i) {
    if (revisions[i].revision_id == revisions[i - 1].revision_id) {
      throw ApiError("duplicate revision id " + std::to_string(revisions[i].revision_id) +
                     " for " + title);
    }
  }
  return revisions;
}

std::string WikiClient::latest_wikitext(const std::string& title, int64_t* byte_size) const {
  if (title.empty()) throw InvalidArgumentError("article title must be non-empty");
  FetchSlot slot(*this);

  nlohmann::json body = api_get({
      {"action", "query"},
      {"format", "json"},
      {"formatversion", "2"},
      {"prop", "revisions"},
      {"rvprop", "content|size"},
      {"rvslots", "main"},
      {"rvlimit", "1"},
      {"rvdir", "older"},
      {"titles", title},
  });
  try {
    const nlohmann::json& page = single_page(body, title);
    if (!page.contains("revisions") || page["revisions"].empty()) {
      throw ApiError("no latest revision returned for " + title);
    }
    const nlohmann::json& rev = page["revisions"][0];
    std::string content;
    if (rev.contains("slots") && rev["slots"].contains("main")) {
      content = rev["slots"]["main"].value("content", std::string());
    }
    if (byte_size != nullptr) {
      *byte_size = rev.value("size", static_cast<int64_t>(content.size()));
    }
    return content;
  } catch (const nlohmann::json::exception&) {
    throw ApiError("malformed content payload for " + title);
  }
}

std::vector<std::string> WikiClient::random_titles(int n) const {
  if (n < 1) throw InvalidArgumentError("random sample size must be >= 1");
  FetchSlot slot(*this);

  std::vector<std::string> titles;
  std::set<std::string> seen;
  // The random list can repeat across requests; keep asking until n distinct
  // titles have been collected.
  for (int round = 0; round < 100 && titles.size() < static_cast<size_t>(n); ++round) {
    int want = n - static_cast<int>(titles.size());
    // Ask for a few extra so repeated entries cannot starve small requests.
    int batch = std::clamp(want, 10, 500);
    nlohmann::json body = api_get({
        {"action", "query"},
        {"format", "json"},
        {"formatversion", "2"},
        {"list", "random"},
        {"rnnamespace", "0"},
        {"rnlimit", std::to_string(batch)},
    });
    if (!body.contains("query") || !body["query"].contains("random")) {
      throw ApiError("random list missing from API response");
    }
    try {
      for (const nlohmann::json& entry : body["query"]["random"]) {
        std::string title = entry.value("title", std::string());
        if (title.empty()) throw ApiError("random entry without a title");
        if (seen.insert(title).second) {
          titles.push_back(std::move(title));
          if (titles.size() == static_cast<size_t>(n)) break;
        }
      }
    } catch (const nlohmann::json::exception&) {
      throw ApiError("malformed random list payload");
    }
  }
  if (titles.size() < static_cast<size_t>(n)) {
    throw ApiError("random-article facility kept returning duplicates");
  }
  return titles;
}

}  // namespace wp
