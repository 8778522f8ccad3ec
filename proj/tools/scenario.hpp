#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Scenario runner behind the mtcav binary: resolves key=value parameters
// from per-command defaults, an optional config file, the environment
// (output_dir only) and command-line overrides, then dispatches to the
// owning module and writes its output files plus a manifest.
//
// Exit codes: 0 success, 2 config error, 3 precondition violation,
// 4 numerical abort.

namespace mtcav::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string command;
  std::map<std::string, std::string> params;  // fully resolved
  std::filesystem::path output_dir;
  std::uint64_t seed = 0;

  double get_double(const std::string& key) const;
  long get_long(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  const std::string& get(const std::string& key) const;
};

// Parses argv into a scenario: argv[1] is the command, remaining arguments
// are either key=value overrides or (at most one) config file path.
Scenario resolve(int argc, const char* const* argv);

// Runs a resolved scenario; throws ConfigError / std::invalid_argument /
// std::runtime_error for the three failure classes.
void run(Scenario& scenario);

// Full entry point with error mapping to exit codes.
int main_entry(int argc, const char* const* argv);

std::string usage();

}  // namespace mtcav::cli
