#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "interface/cache_fixture.hpp"
#include "support/fake_wiki.hpp"
#include "support/subprocess.hpp"
#include "support/tempdir.hpp"

using wptest::run_command;
using wptest::shell_quote;

namespace {

const std::string kCli = WP_CLI_PATH;

std::string write_table1_csv(const wptest::TempDir& dir) {
  auto path = dir / "table1.csv";
  std::ofstream out(path);
  out << ",Conqueror,Follower,Rebel,Cowboy\n";
  out << "Featured,39,23,19,94\n";
  out << "Non-Assessed,40,6,18,118\n";
  return path.string();
}

}  // namespace

TEST_CASE("cli: version and usage") {
  CHECK(run_command(kCli + " --version").exit_code == 0);
  CHECK(run_command(kCli).exit_code != 0);
  CHECK(run_command(kCli + " frobnicate").exit_code != 0);
}

TEST_CASE("cli: stats on the reference counts") {
  wptest::TempDir dir;
  std::string csv = write_table1_csv(dir);

  wptest::CommandResult table = run_command(kCli + " stats " + shell_quote(csv));
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("Chi-Square,12.59,df,3,p-value,0.005613") != std::string::npos);
  CHECK(table.output.find("Featured,22.3,13.1,10.9,53.7,100.0") != std::string::npos);
  CHECK(table.output.find("Non-Assessed,-0.04,-2.28,-0.20,0.95") != std::string::npos);

  wptest::CommandResult json = run_command(kCli + " stats --json " + shell_quote(csv));
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"statistic\"") != std::string::npos);
  CHECK(json.output.find("\"df\": 3") != std::string::npos);
}

TEST_CASE("cli: stats on a missing file is fatal") {
  CHECK(run_command(kCli + " stats /nonexistent/x.csv").exit_code == 2);
}

TEST_CASE("cli: analyze a cached article and write artifacts") {
  wptest::TempDir dir;
  auto cache = (dir / "cache").string();
  wptest::write_cache_file(dir / "cache", "Boston-like", wptest::boston_like_cache());

  std::string base = kCli + " --api-url http://127.0.0.1:9/w/api.php --cache-dir " +
                     shell_quote(cache) + " --set max_retries=0";
  wptest::CommandResult result = run_command(base + " analyze Boston-like --out " +
                                             shell_quote((dir / "report").string()));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("Ajd\tConqueror\tconqueror_dominant") != std::string::npos);
  CHECK(result.output.find("Atlant\tCowboy") != std::string::npos);
  CHECK(result.output.find("Loodog\tFollower") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "report" / "Boston-like.svg"));
  CHECK(std::filesystem::exists(dir / "report" / "Boston-like.csv"));
  CHECK(std::filesystem::exists(dir / "report" / "Boston-like.json"));

  // --set reaches the classifier: keep only the single top editor.
  wptest::CommandResult top1 = run_command(base + " --set top_n=1 analyze Boston-like");
  CHECK(top1.exit_code == 0);
  CHECK(top1.output.find("Ajd") != std::string::npos);
  CHECK(top1.output.find("Loodog") == std::string::npos);
}

TEST_CASE("cli: analyze an uncached article offline is fatal") {
  wptest::TempDir dir;
  wptest::CommandResult result =
      run_command(kCli + " --api-url http://127.0.0.1:9/w/api.php --cache-dir " +
                  shell_quote((dir / "cache").string()) +
                  " --set max_retries=0 analyze Nowhere");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("network error") != std::string::npos);
}

TEST_CASE("cli: study exit codes") {
  wptest::TempDir dir;
  wptest::write_cache_file(dir / "cache", "Boston-like", wptest::boston_like_cache());
  wptest::write_cache_file(dir / "cache", "Dueling", wptest::rebel_pair_cache());
  std::ofstream(dir / "featured.txt") << "Boston-like\n";
  std::ofstream(dir / "na.txt") << "Dueling\n";
  std::ofstream(dir / "na_plus.txt") << "Dueling\nUnreachable page\n";
  std::ofstream(dir / "na_bad.txt") << "Unreachable page\n";

  std::string base = kCli + " --api-url http://127.0.0.1:9/w/api.php --cache-dir " +
                     shell_quote((dir / "cache").string()) + " --set max_retries=0 study" +
                     " --featured " + shell_quote((dir / "featured.txt").string());

  wptest::CommandResult ok = run_command(base + " --na " + shell_quote((dir / "na.txt").string()) +
                                         " --out " + shell_quote((dir / "out").string()));
  CHECK(ok.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "out" / "contingency.csv"));
  CHECK(std::filesystem::exists(dir / "out" / "study.json"));
  CHECK(std::filesystem::exists(dir / "out" / "charts" / "Boston-like.svg"));
  CHECK(std::filesystem::exists(dir / "out" / "personas" / "Dueling.csv"));

  wptest::CommandResult partial =
      run_command(base + " --na " + shell_quote((dir / "na_plus.txt").string()) + " --out " +
                  shell_quote((dir / "out2").string()));
  CHECK(partial.exit_code == 1);
  CHECK(partial.output.find("1 skipped") != std::string::npos);

  wptest::CommandResult fatal =
      run_command(base + " --na " + shell_quote((dir / "na_bad.txt").string()) + " --out " +
                  shell_quote((dir / "out3").string()));
  CHECK(fatal.exit_code == 2);
}

TEST_CASE("cli: fetch against a live endpoint") {
  wptest::FakeWiki wiki;
  wptest::FakeArticle article;
  for (int i = 0; i < 75; ++i) {
    wptest::FakeRevision rev;
    rev.revid = i + 1;
    rev.timestamp = wptest::cache_timestamp(2010, 1 + (i % 12), 1 + (i % 27), i % 24, 0);
    rev.user = "author" + std::to_string(i % 15);
    article.revisions.push_back(std::move(rev));
  }
  article.wikitext = std::string(2500, 'q');
  wiki.add_article("Reachable", std::move(article));

  wptest::TempDir dir;
  std::string base = kCli + " --api-url " + shell_quote(wiki.api_url()) + " --cache-dir " +
                     shell_quote((dir / "cache").string()) + " --set retry_base_delay_ms=1";

  wptest::CommandResult ok = run_command(base + " fetch Reachable");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("Reachable\t75 revisions") != std::string::npos);

  wptest::CommandResult mixed = run_command(base + " fetch Reachable Missing_page");
  CHECK(mixed.exit_code == 1);

  wptest::CommandResult all_bad = run_command(base + " fetch Missing_page");
  CHECK(all_bad.exit_code == 2);

  wptest::CommandResult none = run_command(base + " fetch");
  CHECK(none.exit_code == 2);
}

TEST_CASE("cli: random sampling with eligibility filter") {
  wptest::FakeWiki wiki;
  wptest::FakeArticle big;
  for (int i = 0; i < 60; ++i) {
    wptest::FakeRevision rev;
    rev.revid = i + 1;
    rev.timestamp = wptest::cache_timestamp(2012, 1 + (i % 12), 1 + (i % 27), 0, 0);
    rev.user = "author" + std::to_string(i % 12);
    big.revisions.push_back(std::move(rev));
  }
  big.wikitext = std::string(3000, 'a');
  wiki.add_article("Big enough", std::move(big));

  wptest::FakeArticle small;
  wptest::FakeRevision only;
  only.revid = 1;
  only.timestamp = "2012-03-04T05:06:00Z";
  only.user = "solo";
  small.revisions.push_back(only);
  small.wikitext = "{{city-stub}} tiny";
  wiki.add_article("Tiny stub", std::move(small));

  wiki.set_random_rounds({{"Big enough", "Tiny stub"}});

  wptest::TempDir dir;
  wptest::CommandResult result = run_command(
      kCli + " --api-url " + shell_quote(wiki.api_url()) + " --cache-dir " +
      shell_quote((dir / "cache").string()) + " fetch --random 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("eligible\tBig enough") != std::string::npos);
  CHECK(result.output.find("ineligible\tTiny stub") != std::string::npos);
  CHECK(result.output.find("1 of 2 candidates eligible") != std::string::npos);
}

TEST_CASE("cli: bot exclusion flag and config file") {
  wptest::TempDir dir;
  // CountBot out-edits everyone; with --exclude-bots it disappears.
  std::vector<wptest::CacheRevision> revisions = wptest::boston_like_cache();
  int64_t next_id = 900000;
  for (int q = 0; q < 8; ++q) wptest::append_quarter(revisions, "CountBot", q, 40, next_id);
  wptest::write_cache_file(dir / "cache", "Botted", std::move(revisions));

  std::string base = kCli + " --api-url http://127.0.0.1:9/w/api.php --cache-dir " +
                     shell_quote((dir / "cache").string()) + " --set max_retries=0";
  wptest::CommandResult with_bots = run_command(base + " analyze Botted");
  CHECK(with_bots.exit_code == 0);
  CHECK(with_bots.output.find("CountBot") != std::string::npos);

  wptest::CommandResult without_bots = run_command(base + " --exclude-bots analyze Botted");
  CHECK(without_bots.exit_code == 0);
  CHECK(without_bots.output.find("CountBot") == std::string::npos);
  CHECK(without_bots.output.find("Ajd") != std::string::npos);

  // A config file tightening top_n has the same reach as --set.
  std::ofstream(dir / "conf.txt") << "top_n = 2\n";
  wptest::CommandResult configured =
      run_command(base + " --config " + shell_quote((dir / "conf.txt").string()) +
                  " analyze Botted");
  CHECK(configured.exit_code == 0);
  CHECK(configured.output.find("CountBot") != std::string::npos);
  CHECK(configured.output.find("Loodog") == std::string::npos);

  wptest::CommandResult bad_config = run_command(
      base + " --config " + shell_quote((dir / "missing.conf").string()) + " analyze Botted");
  CHECK(bad_config.exit_code == 2);
}

TEST_CASE("cli: api url can come from the environment") {
  wptest::TempDir dir;
  wptest::write_cache_file(dir / "cache", "Boston-like", wptest::boston_like_cache());
  // A bogus endpoint is fine: the article is cached, no request is made.
  wptest::CommandResult result = run_command(
      "WIKI_API_URL=http://127.0.0.1:9/w/api.php WIKI_CACHE_DIR=" +
      shell_quote((dir / "cache").string()) + " " + kCli +
      " --set max_retries=0 analyze Boston-like");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("Ajd") != std::string::npos);
}
