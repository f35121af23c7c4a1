#include <doctest.h>

#include <fstream>
#include <sstream>

#include "core/cache.hpp"
#include "core/errors.hpp"
#include "core/strutil.hpp"
#include "support/fixtures.hpp"
#include "support/tempdir.hpp"

using namespace wp;

static std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("percent encoding") {
  CHECK(percent_encode("Boston") == "Boston");
  CHECK(percent_encode("My Article") == "My%20Article");
  CHECK(percent_encode("A/B") == "A%2FB");
  CHECK(percent_encode("a_b-c.d~e") == "a_b-c.d~e");
  CHECK(percent_encode("São") == "S%C3%A3o");
}

TEST_CASE("serialized line layout is stable") {
  RevisionRecord rev;
  rev.article_key = "X";
  rev.revision_id = 1;
  rev.timestamp = parse_utc_timestamp("2005-02-10T01:02:03Z");
  rev.editor_key = "A";
  CHECK(serialize_revisions({&rev, 1}) ==
        "{\"article_key\":\"X\",\"revision_id\":1,\"timestamp\":\"2005-02-10T01:02:03Z\","
        "\"editor_key\":\"A\"}\n");
}

TEST_CASE("cache round-trip is byte-identical") {
  wptest::TempDir dir;
  std::vector<RevisionRecord> revisions = wptest::boston_like_revisions();
  std::sort(revisions.begin(), revisions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.timestamp, a.revision_id) < std::tie(b.timestamp, b.revision_id);
  });

  write_revision_cache(dir.path(), "Boston-like", revisions);
  auto loaded = read_revision_cache(dir.path(), "Boston-like");
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->size() == revisions.size());
  for (size_t i = 0; i < revisions.size(); ++i) {
    CHECK((*loaded)[i].article_key == revisions[i].article_key);
    CHECK((*loaded)[i].revision_id == revisions[i].revision_id);
    CHECK((*loaded)[i].timestamp == revisions[i].timestamp);
    CHECK((*loaded)[i].editor_key == revisions[i].editor_key);
  }

  std::string first = read_file(revision_cache_path(dir.path(), "Boston-like"));
  write_revision_cache(dir.path(), "Boston-like", *loaded);
  std::string second = read_file(revision_cache_path(dir.path(), "Boston-like"));
  CHECK(first == second);
  CHECK(first == serialize_revisions(revisions));
}

TEST_CASE("missing cache entry is nullopt") {
  wptest::TempDir dir;
  CHECK_FALSE(read_revision_cache(dir.path(), "Nothing here").has_value());
}

TEST_CASE("corrupt cache lines raise IoError") {
  wptest::TempDir dir;
  auto path = revision_cache_path(dir.path(), "Bad");
  {
    std::ofstream out(path);
    out << "{\"article_key\":\"Bad\",\"revision_id\":1,\"timestamp\":\"2005-02-10T01:02:03Z\","
           "\"editor_key\":\"A\"}\n";
    out << "not json at all\n";
  }
  CHECK_THROWS_AS(read_revision_cache(dir.path(), "Bad"), IoError);

  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"article_key\":\"Bad\",\"revision_id\":1,\"timestamp\":\"yesterday\","
           "\"editor_key\":\"A\"}\n";
  }
  CHECK_THROWS_AS(read_revision_cache(dir.path(), "Bad"), IoError);

  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"article_key\":\"Bad\",\"revision_id\":0,\"timestamp\":\"2005-02-10T01:02:03Z\","
           "\"editor_key\":\"A\"}\n";
  }
  CHECK_THROWS_AS(read_revision_cache(dir.path(), "Bad"), IoError);
}

TEST_CASE("titles map to distinct cache files") {
  wptest::TempDir dir;
  CHECK(revision_cache_path(dir.path(), "A B") != revision_cache_path(dir.path(), "A_B"));
  CHECK(revision_cache_path(dir.path(), "x/y").string().find('/') != std::string::npos);
  CHECK(revision_cache_path(dir.path(), "x/y").filename().string() == "x%2Fy.jsonl");
}
