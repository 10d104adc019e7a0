#include "ellambda/verify.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <thread>

#include "ellambda/error.hpp"
#include "suite_registry.hpp"

namespace ellambda {

namespace detail {

Verdict failed_verdict(const std::string& note, long bits) {
  Verdict v;
  v.status = VerdictStatus::Mismatch;
  v.residual_abs = Real::from_double(std::numeric_limits<double>::infinity(), 64);
  v.residual_rel = v.residual_abs;
  v.precision_used = bits;
  v.note = note;
  return v;
}

ItemOutcome guarded(std::string id, std::vector<std::string> refs, long bits, const std::function<Verdict()>& fn) {
  try {
    return ItemOutcome{std::move(id), fn(), std::move(refs)};
  } catch (const Error& e) {
    return ItemOutcome{std::move(id), failed_verdict(e.what(), bits), std::move(refs)};
  }
}

}  // namespace detail

namespace {

Verdict make_verdict(VerdictStatus status, const Real& residual, const Real& scale, long bits) {
  Verdict v;
  v.status = status;
  v.residual_abs = residual.rounded(64);
  v.residual_rel = (residual / scale).rounded(64);
  v.precision_used = bits;
  return v;
}

}  // namespace

Verdict threshold_check(const Sample& sample, const Real& accept, long precision_used) {
  const bool ok = sample.residual <= accept * sample.scale;
  return make_verdict(ok ? VerdictStatus::Match : VerdictStatus::Mismatch, sample.residual, sample.scale,
                      precision_used);
}

Verdict escalating_check(const std::function<Sample(const PrecisionContext&)>& sample, const PrecisionContext& ctx) {
  std::map<long, Sample> cache;
  const auto at = [&](long bits) -> const Sample& {
    auto it = cache.find(bits);
    if (it == cache.end()) it = cache.emplace(bits, sample(ctx.with_bits(bits))).first;
    return it->second;
  };
  const Real reject = Real::pow2(-(ctx.bits / 2), ctx.working_bits());
  for (long bits = ctx.bits; 2 * bits <= ctx.max_escalation_bits; bits *= 2) {
    const Sample& lo = at(bits);
    const Sample& hi = at(2 * bits);
    if (lo.residual <= ctx.with_bits(bits).tolerance() * lo.scale &&
        hi.residual <= ctx.with_bits(2 * bits).tolerance() * hi.scale) {
      return make_verdict(VerdictStatus::Match, hi.residual, hi.scale, 2 * bits);
    }
    if (lo.residual > reject * lo.scale && hi.residual > reject * hi.scale) {
      return make_verdict(VerdictStatus::Mismatch, hi.residual, hi.scale, 2 * bits);
    }
  }
  throw Error(ErrorKind::EscalationExhausted,
              "residual stayed between accept and reject thresholds up to " +
                  std::to_string(ctx.max_escalation_bits) + " bits");
}

std::vector<Verdict> adjudicate(const std::vector<AlgebraicExpr>& candidates, const Complex& reference,
                                const PrecisionContext& ctx) {
  const long ref_bits = reference.precision();
  const Real scale = max(reference.abs(), Real::from_int(1, ref_bits));
  const Real reject = Real::pow2(-(ctx.bits / 2), ref_bits);
  std::vector<Verdict> out;
  out.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    Real lo, hi;
    try {
      lo = (eval_expr_working(candidate, ctx) - reference).abs();
      hi = (eval_expr_working(candidate, ctx.with_bits(2 * ctx.bits)) - reference).abs();
    } catch (const Error& e) {
      out.push_back(detail::failed_verdict(e.what(), 2 * ctx.bits));
      continue;
    }
    // The reference limits the upper level to its own precision.
    const long hi_bits = std::min(2 * ctx.bits, ref_bits - ctx.guard_bits);
    const bool match = lo <= ctx.tolerance() * scale && hi <= ctx.with_bits(hi_bits).tolerance() * scale;
    const bool mismatch = lo > reject * scale && hi > reject * scale;
    Verdict v = make_verdict(match ? VerdictStatus::Match : VerdictStatus::Mismatch, hi, scale, 2 * ctx.bits);
    if (!match && !mismatch) v.note = "ambiguous: residual between accept and reject thresholds";
    out.push_back(std::move(v));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "weber-j",        "berwick-j",   "cubic-identities", "theorem-1-1", "lambda-weber",
      "lambda-berwick", "factorizations", "function-equations", "derivative", "monotonicity",
      "ochiai",         "sqrt21",      "weber-cubic-roots", "printed-z",
  };
  return names;
}

namespace {

unsigned worker_count(const SuiteOptions& options, std::size_t tasks) {
  // MPFR keeps constant caches per thread only when built with TLS.
  if (!mpfr_buildopt_tls_p()) return 1;
  unsigned n = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

std::vector<ReportItem> run_tasks(std::string_view suite, const std::vector<detail::SuiteTask>& tasks,
                                  const TableSet& tables, const SuiteOptions& options) {
  std::vector<std::vector<detail::ItemOutcome>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const auto& task = tasks[k];
      try {
        results[k] = task.run();
      } catch (const Error& e) {
        results[k] = {detail::ItemOutcome{task.id, detail::failed_verdict(e.what(), options.ctx.bits), task.refs}};
      }
    }
    mpfr_free_cache();
  };
  const unsigned n = worker_count(options, tasks.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  std::vector<ReportItem> items;
  for (auto& group : results) {
    for (auto& outcome : group) {
      ReportItem item{std::move(outcome.id), std::move(outcome.verdict), std::move(outcome.refs)};
      if (const DiscrepancyRecord* entry = tables.discrepancy_for(suite, item.id)) {
        if (entry->adjudication == Adjudication::PaperTypoConfirmed &&
            item.verdict.status == VerdictStatus::Mismatch) {
          item.verdict.status = VerdictStatus::ExpectedDiscrepancy;
          item.verdict.discrepancy_id = entry->id;
        }
        if (std::find(item.refs.begin(), item.refs.end(), entry->id) == item.refs.end()) {
          item.refs.push_back(entry->id);
        }
      }
      items.push_back(std::move(item));
    }
  }
  return items;
}

}  // namespace

Report run_suite(std::string_view name, const TableSet& tables, const SuiteOptions& options) {
  options.ctx.validate();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = std::string(name);
  report.seed = options.seed;
  report.precision_bits = options.ctx.bits;
  report.allow_known_discrepancies = options.allow_known_discrepancies;
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      for (auto& item : run_tasks(suite, detail::build_suite(suite, tables, options), tables, options)) {
        item.id = suite + "/" + item.id;
        report.items.push_back(std::move(item));
      }
    }
  } else {
    report.items = run_tasks(name, detail::build_suite(name, tables, options), tables, options);
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace ellambda
