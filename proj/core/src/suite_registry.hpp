#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/tables.hpp"
#include "ellambda/verify.hpp"

namespace ellambda::detail {

struct ItemOutcome {
  std::string id;
  Verdict verdict;
  std::vector<std::string> refs;
};

/// One independent unit of work. `id` names the single item reported when
/// the task throws before producing anything.
struct SuiteTask {
  std::string id;
  std::vector<std::string> refs;
  std::function<std::vector<ItemOutcome>()> run;
};

/// UnknownSuite for names outside suite_names().
std::vector<SuiteTask> build_suite(std::string_view name, const TableSet& tables, const SuiteOptions& options);

/// Mismatch carrying an infinite residual and the error text.
Verdict failed_verdict(const std::string& note, long bits);

/// Runs `fn`, turning a library Error into failed_verdict.
ItemOutcome guarded(std::string id, std::vector<std::string> refs, long bits, const std::function<Verdict()>& fn);

}  // namespace ellambda::detail
