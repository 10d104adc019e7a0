#include "ellambda/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "ellambda/error.hpp"

namespace ellambda {

using json = nlohmann::ordered_json;

namespace {

constexpr int kResidualDigits = 6;
constexpr long kResidualBits = 64;

std::string residual_string(const Real& r) { return r.to_scientific(kResidualDigits); }

json summary_json(const ReportSummary& s) {
  json out;
  out["total"] = s.total;
  out["match"] = s.match;
  out["mismatch"] = s.mismatch;
  out["expected_discrepancy"] = s.expected_discrepancy;
  return out;
}

json item_json(const ReportItem& item) {
  json out;
  out["id"] = item.id;
  out["status"] = std::string(status_name(item.verdict.status));
  out["residual_abs"] = residual_string(item.verdict.residual_abs);
  out["residual_rel"] = residual_string(item.verdict.residual_rel);
  out["precision_used"] = item.verdict.precision_used;
  if (item.verdict.discrepancy_id) out["discrepancy_id"] = *item.verdict.discrepancy_id;
  if (!item.verdict.note.empty()) out["note"] = item.verdict.note;
  out["refs"] = item.refs;
  return out;
}

[[noreturn]] void malformed(const std::string& what) { throw ParseError("<report>", 1, 1, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

}  // namespace

ReportSummary Report::summary() const {
  ReportSummary s;
  s.total = items.size();
  for (const auto& item : items) {
    switch (item.verdict.status) {
      case VerdictStatus::Match: ++s.match; break;
      case VerdictStatus::Mismatch: ++s.mismatch; break;
      case VerdictStatus::ExpectedDiscrepancy: ++s.expected_discrepancy; break;
    }
  }
  return s;
}

bool Report::passed() const {
  const ReportSummary s = summary();
  return s.mismatch == 0 && (allow_known_discrepancies || s.expected_discrepancy == 0);
}

std::string report_to_json(const Report& report) {
  json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["precision_bits"] = report.precision_bits;
  out["allow_known_discrepancies"] = report.allow_known_discrepancies;
  json items = json::array();
  for (const auto& item : report.items) items.push_back(item_json(item));
  out["items"] = std::move(items);
  out["summary"] = summary_json(report.summary());
  out["passed"] = report.passed();
  out["elapsed_ms"] = report.elapsed_ms;
  return out.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("<report>", 1, static_cast<int>(e.byte), e.what());
  }
  Report report;
  try {
    report.suite = field(doc, "suite").get<std::string>();
    report.seed = field(doc, "seed").get<std::uint64_t>();
    report.precision_bits = field(doc, "precision_bits").get<long>();
    report.allow_known_discrepancies = field(doc, "allow_known_discrepancies").get<bool>();
    report.elapsed_ms = field(doc, "elapsed_ms").get<std::int64_t>();
    const json& items = field(doc, "items");
    if (!items.is_array()) malformed("\"items\" must be an array");
    for (const json& it : items) {
      ReportItem item;
      item.id = field(it, "id").get<std::string>();
      item.verdict.status = parse_status(field(it, "status").get<std::string>());
      item.verdict.residual_abs = Real::from_string(field(it, "residual_abs").get<std::string>(), kResidualBits);
      item.verdict.residual_rel = Real::from_string(field(it, "residual_rel").get<std::string>(), kResidualBits);
      item.verdict.precision_used = field(it, "precision_used").get<long>();
      if (it.contains("discrepancy_id")) item.verdict.discrepancy_id = it.at("discrepancy_id").get<std::string>();
      if (it.contains("note")) item.verdict.note = it.at("note").get<std::string>();
      item.refs = field(it, "refs").get<std::vector<std::string>>();
      report.items.push_back(std::move(item));
    }
  } catch (const json::exception& e) {
    malformed(e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    malformed(e.what());
  }
  return report;
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  std::size_t width = 4;
  for (const auto& item : report.items) width = std::max(width, item.id.size());
  out << "suite " << report.suite << "  seed " << report.seed << "  precision " << report.precision_bits
      << " bits\n";
  for (const auto& item : report.items) {
    const auto& v = item.verdict;
    out << "  " << item.id << std::string(width - item.id.size() + 2, ' ') << status_name(v.status)
        << "  rel " << residual_string(v.residual_rel) << "  abs " << residual_string(v.residual_abs);
    if (v.discrepancy_id) out << "  [" << *v.discrepancy_id << "]";
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << "\n";
  }
  const ReportSummary s = report.summary();
  out << "summary: " << s.total << " items, " << s.match << " match, " << s.mismatch << " mismatch, "
      << s.expected_discrepancy << " expected-discrepancy; " << (report.passed() ? "PASS" : "FAIL") << " ("
      << report.elapsed_ms << " ms)\n";
  return out.str();
}

}  // namespace ellambda
