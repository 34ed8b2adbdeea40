#pragma once

// Command line front end: argument parsing, result cache, output formats
// and the batch runner.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spochar {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitParse = 2, kExitMath = 3 };

struct Command {
  std::string subcommand;
  std::map<std::string, std::string> options; // long name without dashes -> value
  bool flag(const std::string &name) const;
  std::string get(const std::string &name, const std::string &fallback = "") const;
  // "kac algebra=2|3 format=json weight=1d1", cache options excluded
  std::string canonical() const;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string output; // stdout text, ends with a newline
  std::string error;  // stderr text
};

// parse argv (without the program name); throws InvalidInput on bad usage
Command parse_command(const std::vector<std::string> &args);

// run one command, consulting the cache unless disabled
Outcome run(const Command &cmd);

// full entry point used by the spochar binary
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// FNV-1a of the version and the canonical command, as 16 hex digits
std::string cache_key(const Command &cmd);

} // namespace spochar
