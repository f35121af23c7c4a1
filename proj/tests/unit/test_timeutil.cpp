#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/timeutil.hpp"
#include "support/rng.hpp"

using namespace wp;

TEST_CASE("epoch zero is 1970-01-01") {
  CHECK(parse_utc_timestamp("1970-01-01T00:00:00Z") == 0);
  CHECK(format_utc_timestamp(0) == "1970-01-01T00:00:00Z");
}

TEST_CASE("known instants") {
  CHECK(parse_utc_timestamp("2005-04-01T00:00:00Z") == 1112313600);
  CHECK(parse_utc_timestamp("2001-01-15T08:30:00Z") == 979547400);
  CHECK(format_utc_timestamp(1112313600) == "2005-04-01T00:00:00Z");
}

TEST_CASE("leap days") {
  CHECK_NOTHROW(parse_utc_timestamp("2004-02-29T12:00:00Z"));
  CHECK_NOTHROW(parse_utc_timestamp("2000-02-29T12:00:00Z"));
  CHECK_THROWS_AS(parse_utc_timestamp("2005-02-29T12:00:00Z"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("1900-02-29T12:00:00Z"), InvalidArgumentError);
}

TEST_CASE("malformed timestamps are rejected") {
  CHECK_THROWS_AS(parse_utc_timestamp(""), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-04-01 00:00:00Z"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-04-01T00:00:00"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-13-01T00:00:00Z"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-04-31T00:00:00Z"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-04-01T24:00:00Z"), InvalidArgumentError);
  CHECK_THROWS_AS(parse_utc_timestamp("2005-04-01T00:60:00Z"), InvalidArgumentError);
}

TEST_CASE("format/parse round-trip over random instants") {
  std::mt19937_64 rng(20050401);
  for (int i = 0; i < 1000; ++i) {
    // 1995..2035 roughly
    int64_t t = 800000000 + wptest::uniform_int(rng, 0, 1300000000);
    CAPTURE(t);
    CHECK(parse_utc_timestamp(format_utc_timestamp(t)) == t);
  }
}
