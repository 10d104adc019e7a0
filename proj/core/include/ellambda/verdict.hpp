#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ellambda/precision.hpp"

namespace ellambda {

enum class VerdictStatus { Match, Mismatch, ExpectedDiscrepancy };

std::string_view status_name(VerdictStatus status) noexcept;
VerdictStatus parse_status(std::string_view name);

/// Outcome of one numeric adjudication. A mismatch always carries its
/// residual; an expected discrepancy always names its registry entry.
struct Verdict {
  VerdictStatus status = VerdictStatus::Match;
  Real residual_abs;
  Real residual_rel;
  long precision_used = 0;
  std::optional<std::string> discrepancy_id;
  std::string note;

  bool is_match() const { return status == VerdictStatus::Match; }
};

}  // namespace ellambda
