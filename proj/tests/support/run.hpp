#pragma once

// Runs the command-line tool as a child process and captures its output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fdeform::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

inline RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline RunResult run_cli(const std::string& args) { return run(std::string(FDEFORM_CLI) + " " + args); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// Validates `report_text` against the shipped schema with Python's jsonschema.
inline bool schema_valid(const std::string& report_text, const std::string& scratch_path) {
  write_file(scratch_path, report_text);
  const RunResult r = run(std::string(FDEFORM_PYTHON) + " " + FDEFORM_VALIDATOR + " " + FDEFORM_SCHEMA + " " +
                          scratch_path);
  return r.exit_code == 0;
}

}  // namespace fdeform::testing
