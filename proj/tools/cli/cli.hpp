#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace pwb::cli {

enum ExitCode { kOk = 0, kError = 1, kNegative = 2 };

// Parses argv, runs one subcommand and writes the report to out (JSON, or
// file text for family/envelope without --json) and a summary to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SuiteVector {
  std::string key;          // stable identifier
  std::string description;  // what is checked
  bool pass = false;
  std::string detail;
};
// Every bundled reference vector, evaluated in parallel, collated in order.
std::vector<SuiteVector> paper_suite();

// Error kinds that report a mathematical negative (exit 2) rather than a failure.
bool is_negative_kind(const std::string& kind);

// SHA-256 of a file's bytes as lowercase hex.
std::string file_sha256(const std::string& path);

}  // namespace pwb::cli
