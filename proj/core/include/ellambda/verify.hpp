#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/expr.hpp"
#include "ellambda/precision.hpp"
#include "ellambda/report.hpp"
#include "ellambda/tables.hpp"
#include "ellambda/verdict.hpp"

namespace ellambda {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  PrecisionContext ctx{512};
  std::uint64_t seed = kDefaultSeed;
  bool allow_known_discrepancies = false;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// weber-j, berwick-j, cubic-identities, theorem-1-1, lambda-weber,
/// lambda-berwick, factorizations, function-equations, derivative,
/// monotonicity, ochiai, sqrt21, weber-cubic-roots, printed-z.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or "all" (every suite, item ids prefixed with the
/// suite name). UnknownSuite for anything else.
Report run_suite(std::string_view name, const TableSet& tables, const SuiteOptions& options);

/// Compares each candidate against a reference computed at >= 2P bits.
/// Candidates are evaluated at P, and again at 2P: match when the relative
/// residual is within 2^-(P-2G) at both, mismatch when it exceeds 2^-(P/2)
/// at both; anything in between is reported as a mismatch with a note.
std::vector<Verdict> adjudicate(const std::vector<AlgebraicExpr>& candidates, const Complex& reference,
                                const PrecisionContext& ctx);

/// A residual and the scale it is measured against.
struct Sample {
  Real residual;
  Real scale;
};

/// Escalating check for a quantity that can be recomputed at any precision,
/// with the same accept/reject protocol as expr_equal_numeric.
Verdict escalating_check(const std::function<Sample(const PrecisionContext&)>& sample, const PrecisionContext& ctx);

/// One-shot check: match iff residual <= accept * scale.
Verdict threshold_check(const Sample& sample, const Real& accept, long precision_used);

}  // namespace ellambda
