#pragma once

// Command layer behind the grw executable, kept in a library so tests and
// the acceptance harness can drive it without spawning processes.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace grw::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kViolations = 1, kInputError = 2 };

struct Options {
  std::optional<std::string> report;  // JSON report path
  std::optional<int> workers;
  std::optional<std::size_t> ideal_cap;
  std::optional<std::size_t> ring_cap;
  std::optional<std::string> degrees;  // comma list of group element names or indices
  std::string corpus = "default";      // or a directory of *.spec files
  std::string side = "two-sided";      // for `ideals`
};

struct Outcome {
  int exit_code = kOk;
  nlohmann::ordered_json report;
};

const std::vector<std::string>& commands();

// `spec` is a file path ("-" reads standard input); ignored by the corpus
// commands. Input errors become exit code 2 with a message on `err`.
Outcome run(const std::string& command, const std::string& spec, const Options& opts,
            std::ostream& out, std::ostream& err);

// argv front end (CLI11).
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace grw::cli
