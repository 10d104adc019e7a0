// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ellambda/ellambda.hpp"

using namespace ellambda;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs >= budget_s) {
    o.pass = false;
    o.detail += " over time budget";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

const TableSet& tables() {
  static const TableSet t = TableSet::load(ELLAMBDA_TEST_DATA_DIR);
  return t;
}

Report suite(const char* name, long bits) {
  SuiteOptions opt;
  opt.ctx = PrecisionContext(bits);
  return run_suite(name, tables(), opt);
}

bool starts_with(const std::string& s, std::string_view p) { return s.rfind(p, 0) == 0; }
bool ends_with(const std::string& s, std::string_view p) {
  return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

struct Tally {
  std::size_t seen = 0;
  std::size_t match = 0;
  std::size_t expected = 0;
  std::size_t mismatch = 0;
  Real worst = Real::zero(64);

  void add(const Verdict& v) {
    ++seen;
    switch (v.status) {
      case VerdictStatus::Match: ++match; break;
      case VerdictStatus::ExpectedDiscrepancy: ++expected; break;
      case VerdictStatus::Mismatch: ++mismatch; break;
    }
    if (v.status == VerdictStatus::Match) worst = max(worst, v.residual_rel);
  }
  std::string str() const {
    return std::to_string(match) + "/" + std::to_string(seen) + " match, " + std::to_string(expected) +
           " expected discrepancies, " + std::to_string(mismatch) + " mismatches, worst match residual " +
           worst.to_scientific(3);
  }
};

Tally tally(const Report& r, const std::function<bool(const std::string&)>& keep) {
  Tally t;
  for (const auto& item : r.items)
    if (keep(item.id)) t.add(item.verdict);
  return t;
}

Outcome all_match(const Report& r, std::size_t expected_count, const std::function<bool(const std::string&)>& keep) {
  const Tally t = tally(r, keep);
  return {t.seen == expected_count && t.match == t.seen, t.str()};
}

Complex cubic_at(const MonicCubic& m, const Complex& x) { return ((x + m.a) * x + m.b) * x + m.c; }

Real cubic_scale(const MonicCubic& m, const Complex& x) {
  const Real ax = x.abs();
  Real s = max(Real::from_int(1, 64), ax * ax * ax);
  s = max(s, m.a.abs() * ax * ax);
  s = max(s, m.b.abs() * ax);
  return max(s, m.c.abs());
}

}  // namespace

int main() {
  criterion(1, "lambda(i) = 1/2 at P=256", 1.0, [] {
    const PrecisionContext ctx(256);
    const Complex l = lambda_of_tau(UpperHalfPoint::sqrt_minus(Real::from_int(1, 300), 300), ctx);
    const Real err = (l - Complex::from_rational(BigRational(1, 2), 300)).abs();
    return Outcome{err < Real::from_string("1e-70", 64), "|lambda - 1/2| = " + err.to_scientific(3)};
  });

  criterion(2, "Weber integers j_d at P=512", 5.0, [] {
    const PrecisionContext ctx(512);
    Real worst = Real::zero(64);
    std::size_t n = 0;
    for (const auto* rec : tables().category("weber")) {
      const Complex exact = eval_expr(tables().j_exact(rec->d), ctx);
      const Complex q = j_of_tau(UpperHalfPoint::half_plus_sqrt(Real::from_int(rec->d, 600), 600), ctx);
      worst = max(worst, (q - exact).abs());
      ++n;
    }
    const Report r = suite("weber-j", 512);
    const Tally t = tally(r, [](const std::string&) { return true; });
    return Outcome{n == 8 && worst < Real::from_string("1e-60", 64) && t.match == 8,
                   "max |j - j_d| = " + worst.to_scientific(3) + "; suite " + t.str()};
  });

  criterion(3, "Berwick records at P=512", 0, [] {
    const Report r = suite("berwick-j", 512);
    std::size_t records = 0, covered = 0;
    for (const auto* rec : tables().category("berwick")) {
      ++records;
      const std::string prefix = "d" + std::to_string(rec->d) + "/";
      bool any = false;
      for (const auto& item : r.items)
        if (starts_with(item.id, prefix) && item.verdict.is_match() &&
            item.verdict.residual_rel < Real::from_string("1e-60", 64))
          any = true;
      covered += any;
    }
    const Tally t = tally(r, [](const std::string&) { return true; });
    return Outcome{records == 20 && covered == 20 && t.mismatch == 0,
                   std::to_string(covered) + "/20 records with a matching form; " + t.str()};
  });

  criterion(4, "cubic closed forms a_d = b_d = c_d = alpha_d", 30.0, [] {
    const Report r = suite("cubic-identities", 512);
    const Tally table = tally(r, [](const std::string& id) { return starts_with(id, "d") && id.find('/') == std::string::npos; });
    const Tally random = tally(r, [](const std::string& id) { return starts_with(id, "random/"); });
    Real worst = Real::zero(64);
    for (const auto& item : r.items)
      if (starts_with(item.id, "d") && item.id.find('/') == std::string::npos)
        worst = max(worst, item.verdict.residual_rel);
    const bool ok = table.seen == 28 && table.match == 28 && worst < Real::from_string("1e-80", 64) &&
                    random.seen == 50 && random.match == 50;
    return Outcome{ok, "table " + table.str() + "; random " + random.str()};
  });

  criterion(5, "printed 50-digit 6 a_11 at P=512", 0, [] {
    const std::string printed = "68.601585457080984363818472671223625016723649408286";
    const PrecisionContext ctx(512);
    const ClosedFormTriple t = closed_forms(eval_expr(tables().j_exact(11), ctx).re(), ctx);
    const std::string got = (6 * t.a).to_decimal(50);
    return Outcome{got == printed, "computed " + got + ", printed " + printed};
  });

  criterion(6, "lambda-tilde closed forms, Weber d, at P=512", 0, [] {
    return all_match(suite("lambda-weber", 512), 8, [](const std::string&) { return true; });
  });

  criterion(7, "lambda-tilde closed forms, Berwick d, at P=512", 0, [] {
    const Report r = suite("lambda-berwick", 512);
    const Tally printed = tally(r, [](const std::string& id) { return ends_with(id, "/printed"); });
    const DiscrepancyRecord* d267 = tables().find_discrepancy("l267-x427");
    const bool adjudicated = d267 != nullptr && d267->adjudication != Adjudication::Pending;
    bool residuals = true;
    for (const auto& item : r.items)
      if (item.verdict.status == VerdictStatus::ExpectedDiscrepancy)
        residuals &= item.verdict.residual_rel.is_finite() && item.verdict.discrepancy_id.has_value();
    const Tally all = tally(r, [](const std::string&) { return true; });
    return Outcome{printed.seen == 20 && all.mismatch == 0 && adjudicated && residuals,
                   printed.str() + (adjudicated ? "; d267 adjudicated" : "; d267 not adjudicated")};
  });

  criterion(8, "exact sextic factorizations", 0, [] {
    return all_match(suite("factorizations", 512), 8, [](const std::string&) { return true; });
  });

  criterion(9, "function equations at 20 random tau, P=256", 0, [] {
    static const std::vector<std::string> rel = {"weber-sum",        "weber-product", "k-squared",  "landen",
                                                 "lambda-shift",     "lambda-inversion", "orbit-sum", "orbit-product"};
    return all_match(suite("function-equations", 256), 20 * rel.size(), [](const std::string& id) {
      for (const auto& r : rel)
        if (ends_with(id, "/" + r)) return true;
      return false;
    });
  });

  criterion(10, "lambda'/lambda against central differences", 0, [] {
    return all_match(suite("derivative", 512), 5, [](const std::string& id) { return ends_with(id, "/product"); });
  });

  criterion(11, "Cardano on random and degenerate cubics at P=256", 0, [] {
    const PrecisionContext ctx(256);
    const long wb = ctx.working_bits();
    const Real tol = ctx.tolerance();
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<long> coef(-100, 100);
    Real worst = Real::zero(64);
    std::size_t bad = 0;
    const auto check = [&](const MonicCubic& m) {
      const CubicRoots r = cardano_roots(m, ctx);
      for (const auto& x : r.roots) {
        const Real res = cubic_at(m, x).abs() / cubic_scale(m, x);
        worst = max(worst, res);
        bad += !(res <= tol);
      }
      if (!r.degenerate) {
        const Real cert = (r.u * r.v + m.p() / 3).abs() / max(Real::from_int(1, 64), m.p().abs());
        worst = max(worst, cert);
        bad += !(cert <= tol);
      }
    };
    for (int n = 0; n < 100; ++n) {
      check({Complex::from_int(coef(rng), wb), Complex::from_int(coef(rng), wb), Complex::from_int(coef(rng), wb)});
    }
    // x^3, (x - 1)^2 (x + 2), (x + 5)^3
    check({Complex::from_int(0, wb), Complex::from_int(0, wb), Complex::from_int(0, wb)});
    check({Complex::from_int(0, wb), Complex::from_int(-3, wb), Complex::from_int(2, wb)});
    check({Complex::from_int(15, wb), Complex::from_int(75, wb), Complex::from_int(125, wb)});
    return Outcome{bad == 0, std::to_string(bad) + " failures, worst residual " + worst.to_scientific(3)};
  });

  criterion(12, "Ochiai identity a = c", 0, [] {
    const Report r = suite("ochiai", 512);
    const Tally random = tally(r, [](const std::string& id) { return starts_with(id, "random/"); });
    const Tally weber = tally(r, [](const std::string& id) { return starts_with(id, "d"); });
    return Outcome{random.seen == 100 && random.match == 100 && weber.seen == 8 && weber.match == 8,
                   "random " + random.str() + "; weber j " + weber.str()};
  });

  criterion(13, "sqrt 21 relation and its sqrt 7 twin at P=512", 0, [] {
    const Report r = suite("sqrt21", 512);
    bool ok = true;
    std::string detail;
    for (const auto& item : r.items) {
      if (item.id != "sqrt21" && item.id != "sqrt7-twin") continue;
      ok &= item.verdict.is_match() && item.verdict.residual_abs < Real::from_string("1e-90", 64);
      detail += item.id + " " + item.verdict.residual_abs.to_scientific(3) + " ";
    }
    return Outcome{ok && !detail.empty(), detail};
  });

  criterion(14, "Weber cubic roots are -f^24, f1^24, f2^24", 0, [] {
    return all_match(suite("weber-cubic-roots", 512), 2, [](const std::string&) { return true; });
  });

  criterion(15, "full verification at P=512", 60.0, [] {
    SuiteOptions opt;
    opt.ctx = PrecisionContext(512);
    opt.allow_known_discrepancies = true;
    const Report r = run_suite("all", tables(), opt);
    const ReportSummary s = r.summary();
    return Outcome{s.mismatch == 0 && r.passed(),
                   std::to_string(s.total) + " items, " + std::to_string(s.match) + " match, " +
                       std::to_string(s.expected_discrepancy) + " expected discrepancies, " +
                       std::to_string(s.mismatch) + " mismatches"};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
