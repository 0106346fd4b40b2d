#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybe::cli {

// Parsed command line: subcommand, input paths and options, validated before
// any computation starts.
struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> options;  // flag -> value ("" for switches)
  bool has(const std::string &flag) const;
  std::string get(const std::string &flag, const std::string &fallback = "") const;
};

// Exit codes: 0 success, 1 validation or theorem-witness failure (the witness
// is serialized to `out`), 2 usage error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ybe::cli
