#pragma once

#include <iosfwd>
#include <string_view>

#include "ellambda/precision.hpp"

namespace ellambda::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kDomain = 3,
};

/// Full command-line entry point; writes to `out` / `err` and returns the
/// process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a+bi", "a-bi", "bi" or "a" (spaces ignored). InvalidArgument on anything else.
Complex parse_tau(std::string_view text, long bits);

/// floor(P log10 2) - 10, at least 1.
int output_digits(long bits);

}  // namespace ellambda::cli
