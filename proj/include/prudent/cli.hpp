#pragma once

// Batch front end: parses argv, runs one subcommand and writes a table as
// CSV, JSON or "name = value" text.

#include <iosfwd>

namespace prudent::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3 };

/// Default precision when --digits is absent; overridden by PRUDENT_DIGITS.
inline constexpr const char* kDigitsEnv = "PRUDENT_DIGITS";

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prudent::cli
