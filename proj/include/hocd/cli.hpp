#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace hocd::cli {

enum ExitCode : int { kOk = 0, kInvalid = 2, kVerificationFailed = 3 };

struct RunConfig {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  std::optional<std::string> modulus;  // "1,1,0,1", constant term first
  std::string function;                // monomial:d | poly:<file> | lut:<file>
  std::string op = "spectrum";         // derive | spectrum | table1 | gold | quadratic | verify
  std::optional<std::size_t> t;
  std::string c = "all";               // index | all | subfield | nonone
  std::optional<std::string> shifts;   // derive: "a1,a2,..."
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> h;
  std::optional<std::filesystem::path> json;
  std::optional<std::filesystem::path> csv;
  unsigned threads = 0;
  bool reduce = false;
  std::size_t witness_cap = 16;
  std::uint64_t seed = 1;
  std::size_t samples = 200;           // verify: instances per property
  std::string c1_exclusion = "vanishing";  // vanishing | all-zero
};

// Runs one operation, prints a human-readable summary to `out` and
// diagnostics to `err`, and writes the requested report files only when the
// run completes. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hocd::cli
