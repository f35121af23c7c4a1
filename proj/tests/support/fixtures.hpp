#ifndef WP_TESTS_FIXTURES_HPP
#define WP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "core/timeutil.hpp"
#include "core/types.hpp"

namespace wptest {

inline int64_t epoch_at(int year, int month, int day, int hour = 0, int minute = 0,
                        int second = 0) {
  return wp::days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

// Spreads `count` edits by one editor across quarter q (0-based from 2005 Q1).
inline void add_quarter_edits(std::vector<wp::RevisionRecord>& revisions,
                              const std::string& article_key, const std::string& editor, int q,
                              int count, int64_t& next_revid) {
  int year = 2005 + q / 4;
  int month = (q % 4) * 3 + 1;
  for (int i = 0; i < count; ++i) {
    wp::RevisionRecord rev;
    rev.article_key = article_key;
    rev.revision_id = next_revid++;
    rev.timestamp = epoch_at(year, month, 1 + (i % 27), (i / 27) % 24, i % 60, 0);
    rev.editor_key = editor;
    revisions.push_back(std::move(rev));
  }
}

// Three archetypal editors over eight quarters: a long-lived dominant
// contributor, a sustained positively-tracking one, and a one-quarter burster.
// Under the default config they classify as Conqueror, Follower and Cowboy.
inline std::vector<wp::RevisionRecord> boston_like_revisions(
    const std::string& article_key = "Boston-like") {
  const int ajd[8] = {10, 8, 9, 7, 6, 5, 4, 3};
  const int loodog[8] = {5, 4, 5, 4, 3, 3, 2, 2};
  std::vector<wp::RevisionRecord> revisions;
  int64_t next_revid = 1;
  for (int q = 0; q < 8; ++q) add_quarter_edits(revisions, article_key, "Ajd", q, ajd[q], next_revid);
  for (int q = 0; q < 8; ++q) {
    add_quarter_edits(revisions, article_key, "Loodog", q, loodog[q], next_revid);
  }
  add_quarter_edits(revisions, article_key, "Atlant", 2, 30, next_revid);
  return revisions;
}

// Two perfectly anti-correlated sustained editors; both classify as Rebels.
inline std::vector<wp::RevisionRecord> rebel_pair_revisions(
    const std::string& article_key = "Dueling") {
  const int alpha[6] = {3, 1, 3, 1, 3, 1};
  const int beta[6] = {1, 3, 1, 3, 1, 3};
  std::vector<wp::RevisionRecord> revisions;
  int64_t next_revid = 100000;
  for (int q = 0; q < 6; ++q) {
    add_quarter_edits(revisions, article_key, "Alpha", q, alpha[q], next_revid);
  }
  for (int q = 0; q < 6; ++q) {
    add_quarter_edits(revisions, article_key, "Beta", q, beta[q], next_revid);
  }
  return revisions;
}

}  // namespace wptest

#endif  // WP_TESTS_FIXTURES_HPP
