#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/verdict.hpp"

namespace ellambda {

struct ReportItem {
  std::string id;
  Verdict verdict;
  std::vector<std::string> refs;
};

struct ReportSummary {
  std::size_t total = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t expected_discrepancy = 0;
};

/// Outcome of one suite run. Residuals keep 6 significant digits.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  long precision_bits = 0;
  bool allow_known_discrepancies = false;
  std::vector<ReportItem> items;
  std::int64_t elapsed_ms = 0;

  ReportSummary summary() const;
  /// No mismatch, and no expected discrepancy unless they are allowed.
  bool passed() const;
};

/// Stable key order: suite, seed, precision_bits, allow_known_discrepancies,
/// items, summary, passed, elapsed_ms.
std::string report_to_json(const Report& report);
/// Inverse of report_to_json; ParseError on malformed input.
Report report_from_json(std::string_view text);
std::string report_to_text(const Report& report);

}  // namespace ellambda
