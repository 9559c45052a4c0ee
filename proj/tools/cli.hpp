#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace permbase::cli {

enum ExitCode : int {
  kSuccess = 0,
  kBadInput = 2,
  kResourceCap = 3,
  kVerificationFailed = 4,
};

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  std::uint64_t element_cap = 2'000'000;
  std::uint64_t node_cap = 5'000'000;
  std::size_t degree_cap = 256;
  Format format = Format::Json;
  std::string output_path; ///< empty means the stream passed to run()
};

/// Runs one CLI invocation (args exclude the program name) and returns the
/// process exit code. Results go to out (or --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permbase::cli
