#ifndef WP_TESTS_SUBPROCESS_HPP
#define WP_TESTS_SUBPROCESS_HPP

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "support/tempdir.hpp"

namespace wptest {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

inline CommandResult run_command(const std::string& command) {
  TempDir dir;
  std::string capture = (dir / "out.txt").string();
  int raw = std::system((command + " > " + capture + " 2>&1").c_str());
  CommandResult result;
  if (raw != -1 && WIFEXITED(raw)) result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out.push_back(c);
  }
  out += "'";
  return out;
}

}  // namespace wptest

#endif  // WP_TESTS_SUBPROCESS_HPP
