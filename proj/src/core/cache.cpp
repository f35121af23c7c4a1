#include "core/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/strutil.hpp"
#include "core/timeutil.hpp"

namespace wp {

std::filesystem::path revision_cache_path(const std::filesystem::path& cache_dir,
                                          const std::string& article_key) {
  return cache_dir / (percent_encode(article_key) + ".jsonl");
}

std::string serialize_revisions(std::span<const RevisionRecord> revisions) {
  std::string out;
  for (const RevisionRecord& rev : revisions) {
    nlohmann::ordered_json line;
    line["article_key"] = rev.article_key;
    line["revision_id"] = rev.revision_id;
    line["timestamp"] = format_utc_timestamp(rev.timestamp);
    line["editor_key"] = rev.editor_key;
    out += line.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<RevisionRecord> deserialize_revisions(const std::string& text,
                                                  const std::string& source_name) {
  std::vector<RevisionRecord> revisions;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(line);
      RevisionRecord rev;
      rev.article_key = parsed.at("article_key").get<std::string>();
      rev.revision_id = parsed.at("revision_id").get<int64_t>();
      rev.timestamp = parse_utc_timestamp(parsed.at("timestamp").get<std::string>());
      rev.editor_key = parsed.at("editor_key").get<std::string>();
      if (rev.revision_id <= 0 || rev.editor_key.empty()) {
        throw InvalidArgumentError("bad revision record");
      }
      revisions.push_back(std::move(rev));
    } catch (const Error&) {
      throw IoError(source_name + ":" + std::to_string(line_no) + ": corrupt revision record");
    } catch (const nlohmann::json::exception&) {
      throw IoError(source_name + ":" + std::to_string(line_no) + ": corrupt revision record");
    }
  }
  return revisions;
}

void write_revision_cache(const std::filesystem::path& cache_dir, const std::string& article_key,
                          std::span<const RevisionRecord> revisions) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  std::filesystem::path final_path = revision_cache_path(cache_dir, article_key);
  std::filesystem::path tmp_path = final_path;
  tmp_path += ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp_path.string());
    out << serialize_revisions(revisions);
    out.flush();
    if (!out) throw IoError("write failed for " + tmp_path.string());
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) throw IoError("cannot rename " + tmp_path.string() + ": " + ec.message());
}

std::optional<std::vector<RevisionRecord>> read_revision_cache(
    const std::filesystem::path& cache_dir, const std::string& article_key) {
  std::filesystem::path path = revision_cache_path(cache_dir, article_key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_revisions(buf.str(), path.string());
}

}  // namespace wp
