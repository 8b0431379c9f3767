#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

// Spawns the installed CLI binary (path from $LAMUP_CLI) and captures
// stdout. Used by the CLI tests and the acceptance suite.

namespace cli {

struct RunResult {
  int code = -1;
  std::string out;
};

inline std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

inline const char* binary_path() {
  const char* path = std::getenv("LAMUP_CLI");
  if (!path || !*path) {
    throw std::runtime_error("set LAMUP_CLI to the lamup binary path");
  }
  return path;
}

inline RunResult run(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(binary_path());
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  RunResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace cli
