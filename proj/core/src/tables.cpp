#include "ellambda/tables.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dsl_lexer.hpp"
#include "ellambda/error.hpp"

namespace ellambda {

using detail::Lexer;
using detail::Token;
using detail::TokenKind;

const NamedForm* SingularValueRecord::find_form(std::string_view name) const {
  for (const auto* forms : {&j_forms, &lambda_forms}) {
    for (const auto& f : *forms) {
      if (f.name == name) return &f;
    }
  }
  return nullptr;
}

std::string_view adjudication_name(Adjudication a) noexcept {
  switch (a) {
    case Adjudication::Pending: return "pending";
    case Adjudication::PaperTypoConfirmed: return "paper-typo-confirmed";
    case Adjudication::Matches: return "matches";
  }
  return "pending";
}

namespace {

// '*' matches any run of characters, including '/'.
bool wildcard_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, resume = 0;
  while (t < text.size()) {
    if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      resume = t;
    } else if (p < pattern.size() && pattern[p] == text[t]) {
      ++p;
      ++t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++resume;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

bool DiscrepancyRecord::covers(std::string_view suite, std::string_view item) const {
  const std::string key = std::string(suite) + "/" + std::string(item);
  return wildcard_match(target, key);
}

namespace {

const std::set<std::string, std::less<>> kCategories = {
    "weber", "berwick", "lambda-weber", "lambda-d1-odd", "lambda-d1-div3", "lambda-nonsquarefree", "lambda-d2",
};

struct HeaderField {
  Token key;
  Token value;
};

// key=value pairs up to the opening brace.
std::vector<HeaderField> parse_header(Lexer& lx) {
  std::vector<HeaderField> fields;
  while (!lx.is_punct('{')) {
    Token key = lx.expect(TokenKind::Ident, "header field or '{'");
    lx.expect_punct('=');
    Token value = lx.next();
    if (value.kind != TokenKind::Number && value.kind != TokenKind::String && value.kind != TokenKind::Ident) {
      lx.fail(value, "expected a header value, found " + Lexer::describe(value));
    }
    fields.push_back({std::move(key), std::move(value)});
  }
  lx.expect_punct('{');
  return fields;
}

long header_long(Lexer& lx, const Token& value) {
  if (value.kind != TokenKind::Number) lx.fail(value, "expected an integer");
  try {
    return std::stol(value.text);
  } catch (const std::exception&) {
    lx.fail(value, "integer out of range");
  }
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::stringstream ss(text);
  std::string id;
  while (std::getline(ss, id, ',')) {
    id.erase(0, id.find_first_not_of(' '));
    id.erase(id.find_last_not_of(' ') + 1);
    if (!id.empty()) ids.push_back(id);
  }
  return ids;
}

QuadFieldElem quad_literal(Lexer& lx, const Token& t, long m) {
  if (t.kind != TokenKind::String) lx.fail(t, "expected a quoted field element");
  try {
    return QuadFieldElem::parse(t.text, m);
  } catch (const Error& err) {
    lx.fail(t, err.what());
  }
}

}  // namespace

void TableSet::parse(std::string_view text, const std::string& source) {
  Lexer lx(text, source);
  ExprBindings bindings;
  std::map<std::pair<std::string, long>, Token> seen;
  for (const auto& r : records_) seen.emplace(std::pair{r.category, r.d}, Token{});

  while (!lx.at_end()) {
    const Token head = lx.expect(TokenKind::Ident, "'let', 'record', 'factorization' or 'discrepancy'");

    if (head.text == "let") {
      const Token name = lx.expect(TokenKind::Ident, "binding name");
      lx.expect_punct('=');
      AlgebraicExpr e = detail::parse_expr_tokens(lx, &bindings);
      lx.expect_punct(';');
      if (!bindings.emplace(name.text, std::move(e)).second) lx.fail(name, "binding @" + name.text + " redefined");
      continue;
    }

    if (head.text == "record") {
      const Token cat = lx.expect(TokenKind::Ident, "category");
      if (!kCategories.contains(cat.text)) lx.fail(cat, "unknown category '" + cat.text + "'");
      SingularValueRecord rec;
      rec.category = cat.text;
      for (const auto& f : parse_header(lx)) {
        if (f.key.text == "d") {
          rec.d = header_long(lx, f.value);
        } else if (f.key.text == "refs") {
          rec.refs = f.value.text;
        } else if (f.key.text == "discrepancies") {
          rec.discrepancy_ids = split_ids(f.value.text);
        } else {
          lx.fail(f.key, "unknown record field '" + f.key.text + "'");
        }
      }
      if (rec.d <= 0) lx.fail(cat, "record needs a positive d");
      const bool is_j = cat.text == "weber" || cat.text == "berwick";
      while (!lx.is_punct('}')) {
        const Token field = lx.expect(TokenKind::Ident, "form name");
        lx.expect_punct('=');
        const Token at = lx.peek();
        AlgebraicExpr e = detail::parse_expr_tokens(lx, &bindings);
        lx.expect_punct(';');
        if (is_j && field.text == "j") {
          rec.j_forms.push_back({"value", std::move(e)});
        } else if (is_j && (field.text == "j.original" || field.text == "j.simplified")) {
          rec.j_forms.push_back({field.text.substr(2), std::move(e)});
        } else if (!is_j && (field.text == "lambda.printed" || field.text == "lambda.corrected")) {
          if (!split_half_plus_i(e)) lx.fail(at, "lambda form must be add[rat(\"1/2\"), mul[i, X]] with X real");
          rec.lambda_forms.push_back({field.text.substr(7), std::move(e)});
        } else {
          lx.fail(field, "form '" + field.text + "' not allowed in a " + cat.text + " record");
        }
      }
      lx.expect_punct('}');
      if (is_j && rec.j_forms.empty()) lx.fail(cat, "record has no j form");
      if (!is_j && !rec.find_form("printed")) lx.fail(cat, "record has no lambda.printed form");
      const auto [it, fresh] = seen.emplace(std::pair{rec.category, rec.d}, cat);
      if (!fresh) {
        throw Error(ErrorKind::DuplicateRecord, source + ":" + std::to_string(cat.line) + ": duplicate " +
                                                    rec.category + " record for d = " + std::to_string(rec.d));
      }
      records_.push_back(std::move(rec));
      continue;
    }

    if (head.text == "factorization") {
      FactorizationRecord rec;
      for (const auto& f : parse_header(lx)) {
        if (f.key.text == "d") {
          rec.d = header_long(lx, f.value);
        } else if (f.key.text == "m") {
          rec.m = header_long(lx, f.value);
          if (rec.m != 1 && !is_squarefree(rec.m)) lx.fail(f.value, "m must be 1 or squarefree");
        } else if (f.key.text == "refs") {
          rec.refs = f.value.text;
        } else {
          lx.fail(f.key, "unknown factorization field '" + f.key.text + "'");
        }
      }
      std::size_t count = 0;
      bool have_scalar = false;
      while (!lx.is_punct('}')) {
        const Token field = lx.expect(TokenKind::Ident, "'scalar' or 'factor'");
        lx.expect_punct('=');
        if (field.text == "scalar") {
          rec.scalar = quad_literal(lx, lx.next(), rec.m);
          have_scalar = true;
        } else if (field.text == "factor") {
          if (count == 3) lx.fail(field, "a factorization has exactly three factors");
          lx.expect_punct('[');
          for (std::size_t k = 0; k < 3; ++k) {
            if (k > 0) lx.expect_punct(',');
            rec.factors[count][k] = quad_literal(lx, lx.next(), rec.m);
          }
          lx.expect_punct(']');
          ++count;
        } else {
          lx.fail(field, "unknown factorization entry '" + field.text + "'");
        }
        lx.expect_punct(';');
      }
      const Token close = lx.next();
      if (count != 3 || !have_scalar) lx.fail(close, "factorization needs a scalar and three factors");
      for (const auto& other : factorizations_) {
        if (other.d == rec.d) {
          throw Error(ErrorKind::DuplicateRecord, source + ": duplicate factorization for d = " + std::to_string(rec.d));
        }
      }
      factorizations_.push_back(std::move(rec));
      continue;
    }

    if (head.text == "discrepancy") {
      DiscrepancyRecord rec;
      for (const auto& f : parse_header(lx)) {
        if (f.key.text == "id") {
          rec.id = f.value.text;
        } else if (f.key.text == "target") {
          rec.target = f.value.text;
        } else if (f.key.text == "adjudication") {
          if (f.value.text == "pending") {
            rec.adjudication = Adjudication::Pending;
          } else if (f.value.text == "paper-typo-confirmed") {
            rec.adjudication = Adjudication::PaperTypoConfirmed;
          } else if (f.value.text == "matches") {
            rec.adjudication = Adjudication::Matches;
          } else {
            lx.fail(f.value, "unknown adjudication '" + f.value.text + "'");
          }
        } else {
          lx.fail(f.key, "unknown discrepancy field '" + f.key.text + "'");
        }
      }
      while (!lx.is_punct('}')) {
        const Token field = lx.expect(TokenKind::Ident, "'location' or 'description'");
        lx.expect_punct('=');
        const Token value = lx.expect(TokenKind::String, "quoted text");
        lx.expect_punct(';');
        if (field.text == "location") {
          rec.location = value.text;
        } else if (field.text == "description") {
          rec.description = value.text;
        } else {
          lx.fail(field, "unknown discrepancy entry '" + field.text + "'");
        }
      }
      lx.expect_punct('}');
      if (rec.id.empty()) lx.fail(head, "discrepancy needs an id");
      if (find_discrepancy(rec.id)) {
        throw Error(ErrorKind::DuplicateRecord, source + ": duplicate discrepancy id \"" + rec.id + "\"");
      }
      discrepancies_.push_back(std::move(rec));
      continue;
    }

    lx.fail(head, "unexpected '" + head.text + "'");
  }
}

void TableSet::check_references() const {
  for (const auto& r : records_) {
    for (const auto& id : r.discrepancy_ids) {
      if (!find_discrepancy(id)) {
        throw Error(ErrorKind::ParseError, r.category + " record d = " + std::to_string(r.d) +
                                               " refers to unknown discrepancy \"" + id + "\"");
      }
    }
  }
}

TableSet TableSet::load_sources(const std::vector<std::pair<std::string, std::string>>& sources) {
  TableSet set;
  for (const auto& [name, text] : sources) set.parse(text, name);
  set.check_references();
  return set;
}

TableSet TableSet::load(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorKind::Io, "table directory " + dir.string() + " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tbl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.emplace_back(path.filename().string(), buf.str());
  }
  if (sources.empty()) throw Error(ErrorKind::Io, "no .tbl files in " + dir.string());
  return load_sources(sources);
}

std::vector<const SingularValueRecord*> TableSet::category(std::string_view name) const {
  std::vector<const SingularValueRecord*> out;
  for (const auto& r : records_) {
    if (r.category == name) out.push_back(&r);
  }
  return out;
}

const SingularValueRecord& TableSet::j_record(long d) const {
  for (const auto& r : records_) {
    if (r.d == d && r.is_j_record()) return r;
  }
  throw Error(ErrorKind::UnknownD, "no j value tabulated for d = " + std::to_string(d));
}

const AlgebraicExpr& TableSet::j_exact(long d) const {
  const SingularValueRecord& r = j_record(d);
  if (const NamedForm* f = r.find_form("simplified")) return f->expr;
  return r.j_forms.front().expr;
}

const SingularValueRecord& TableSet::lambda_record(long d) const {
  for (const auto& r : records_) {
    if (r.d == d && !r.is_j_record()) return r;
  }
  throw Error(ErrorKind::UnknownD, "no lambda closed form tabulated for d = " + std::to_string(d));
}

const AlgebraicExpr& TableSet::lambda_tilde_exact(long d) const { return lambda_record(d).find_form("printed")->expr; }

const FactorizationRecord& TableSet::factorization(long d) const {
  for (const auto& f : factorizations_) {
    if (f.d == d) return f;
  }
  throw Error(ErrorKind::UnknownD, "no factorization tabulated for d = " + std::to_string(d));
}

std::vector<long> TableSet::d1() const {
  std::vector<long> out;
  for (const auto& r : records_) {
    if (r.category == "lambda-d1-odd" || r.category == "lambda-d1-div3" || r.category == "lambda-nonsquarefree") {
      out.push_back(r.d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> TableSet::d2() const {
  std::vector<long> out;
  for (const auto* r : category("lambda-d2")) out.push_back(r->d);
  std::sort(out.begin(), out.end());
  return out;
}

const DiscrepancyRecord* TableSet::find_discrepancy(std::string_view id) const {
  for (const auto& r : discrepancies_) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const DiscrepancyRecord* TableSet::discrepancy_for(std::string_view suite, std::string_view item) const {
  for (const auto& r : discrepancies_) {
    if (r.covers(suite, item)) return &r;
  }
  return nullptr;
}

std::filesystem::path default_table_dir() {
  std::error_code ec;
  const std::filesystem::path source = ELLAMBDA_SOURCE_TABLE_DIR;
  if (std::filesystem::is_directory(source, ec)) return source;
  return ELLAMBDA_INSTALLED_TABLE_DIR;
}

}  // namespace ellambda
