#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/expr.hpp"
#include "ellambda/quad_field.hpp"

namespace ellambda {

/// One printed form of a value, e.g. {"original", ...} or {"simplified", ...}.
struct NamedForm {
  std::string name;
  AlgebraicExpr expr;
};

/// One table row at tau = (1 + sqrt(-d))/2.
///
/// Categories: weber, berwick (j values) and lambda-weber, lambda-d1-odd,
/// lambda-d1-div3, lambda-nonsquarefree, lambda-d2 (closed forms of
/// lambda((sqrt(-d) - 1)/(sqrt(-d) + 1))).
struct SingularValueRecord {
  long d = 0;
  std::string category;
  std::string refs;
  std::vector<std::string> discrepancy_ids;
  /// j forms in file order: "value" for a single form, otherwise
  /// "original" then "simplified".
  std::vector<NamedForm> j_forms;
  /// lambda forms: "printed" and optionally "corrected".
  std::vector<NamedForm> lambda_forms;

  bool is_j_record() const { return !j_forms.empty(); }
  const NamedForm* find_form(std::string_view name) const;
};

struct FactorizationRecord {
  long d = 0;
  long m = 1;
  std::string refs;
  QuadFieldElem scalar;
  std::array<QuadraticFactor, 3> factors;
};

enum class Adjudication { Pending, PaperTypoConfirmed, Matches };

std::string_view adjudication_name(Adjudication a) noexcept;

struct DiscrepancyRecord {
  std::string id;
  std::string location;
  std::string description;
  Adjudication adjudication = Adjudication::Pending;
  /// "<suite>/<item>"; '*' matches any run of characters.
  std::string target;

  bool covers(std::string_view suite, std::string_view item) const;
};

/// Every table file in a directory, loaded and cross-checked.
class TableSet {
 public:
  /// Loads every *.tbl file in `dir` (in name order). ParseError carries the
  /// file, line and column; DuplicateRecord for a repeated (category, d).
  static TableSet load(const std::filesystem::path& dir);
  /// Same as load() over in-memory sources, {name, text} pairs.
  static TableSet load_sources(const std::vector<std::pair<std::string, std::string>>& sources);

  const std::vector<SingularValueRecord>& records() const { return records_; }
  std::vector<const SingularValueRecord*> category(std::string_view name) const;
  const std::vector<FactorizationRecord>& factorizations() const { return factorizations_; }
  const std::vector<DiscrepancyRecord>& discrepancies() const { return discrepancies_; }

  /// The weber or berwick record for d. UnknownD if absent.
  const SingularValueRecord& j_record(long d) const;
  /// The simplified form where two exist.
  const AlgebraicExpr& j_exact(long d) const;
  /// The lambda-* record for d. UnknownD if absent.
  const SingularValueRecord& lambda_record(long d) const;
  /// The printed lambda-tilde form.
  const AlgebraicExpr& lambda_tilde_exact(long d) const;
  const FactorizationRecord& factorization(long d) const;

  /// d values with a cube-root closed form (lambda-d1-*, lambda-nonsquarefree).
  std::vector<long> d1() const;
  /// d values whose sextic splits into quadratics (lambda-d2).
  std::vector<long> d2() const;

  const DiscrepancyRecord* find_discrepancy(std::string_view id) const;
  /// First registry entry whose target covers suite/item.
  const DiscrepancyRecord* discrepancy_for(std::string_view suite, std::string_view item) const;

 private:
  void parse(std::string_view text, const std::string& source);
  void check_references() const;

  std::vector<SingularValueRecord> records_;
  std::vector<FactorizationRecord> factorizations_;
  std::vector<DiscrepancyRecord> discrepancies_;
};

/// The source-tree data directory when it exists, else the installed one.
std::filesystem::path default_table_dir();

}  // namespace ellambda
