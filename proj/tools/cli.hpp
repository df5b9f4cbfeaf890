#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fibgray::cli {

/// Process exit codes; part of the public contract.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kBadDigit = 3,
  kStrictInvalid = 4,
  kSizeGuard = 5,
  kSelfCheckFailure = 6,
};

/// Environment variable holding the default element budget.
inline constexpr const char* kMaxElementsEnv = "FIBGRAY_MAX_ELEMENTS";

enum class OutputFormat { Lines, Json };

struct CliConfig {
  std::string sequence;  // kbonacci | pell | pow2 | linplus | linminus
  std::optional<unsigned> k;
  std::optional<unsigned> h;
  std::size_t length = 0;
  OutputFormat format = OutputFormat::Lines;
  bool force = false;
  std::optional<std::uint64_t> max_elements;
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fibgray::cli
