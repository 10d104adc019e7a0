#include "cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellambda/error.hpp"
#include "ellambda/qseries.hpp"
#include "ellambda/radical_solver.hpp"
#include "ellambda/tables.hpp"
#include "ellambda/transforms.hpp"
#include "ellambda/verify.hpp"

namespace ellambda::cli {

using json = nlohmann::ordered_json;

int output_digits(long bits) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))) - 10);
}

Complex parse_tau(std::string_view text, long bits) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto bad = [&] { return Error(ErrorKind::InvalidArgument, "cannot parse tau \"" + std::string(text) + "\""); };
  if (s.empty()) throw bad();
  try {
    if (s.back() != 'i') return Complex(Real::from_string(s, bits), Real::zero(bits));
    s.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    std::string re = split == std::string::npos ? "0" : s.substr(0, split);
    std::string im = split == std::string::npos ? s : s.substr(split);
    if (im == "+" || im == "" ) im = "1";
    if (im == "-") im = "-1";
    if (im.front() == '+') im.erase(0, 1);
    return Complex(Real::from_string(re, bits), Real::from_string(im, bits));
  } catch (const Error&) {
    throw bad();
  }
}

namespace {

struct Config {
  long prec = 256;
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  bool allow_known = false;
  std::string tables;
};

PrecisionContext context(const Config& cfg) {
  if (cfg.prec < 64) throw Error(ErrorKind::InvalidArgument, "--prec must be at least 64");
  return PrecisionContext(cfg.prec);
}

TableSet load_tables(const Config& cfg) {
  return TableSet::load(cfg.tables.empty() ? default_table_dir() : std::filesystem::path(cfg.tables));
}

// Components below the acceptance tolerance relative to |z| print as zero.
Complex chop(const Complex& z, const PrecisionContext& ctx) {
  const Real floor = ctx.tolerance() * max(z.abs(), Real::from_int(1, 64));
  const auto clean = [&](const Real& x) { return abs(x) <= floor ? Real::zero(x.precision()) : x; };
  return Complex(clean(z.re()), clean(z.im()));
}

json complex_json(const Complex& z, int digits) {
  return json{{"re", z.re().to_decimal(digits)}, {"im", z.im().to_decimal(digits)}};
}

std::string complex_text(const Complex& z, int digits) {
  const std::string re = z.re().to_decimal(digits);
  std::string im = z.im().to_decimal(digits);
  const bool negative = !im.empty() && im.front() == '-';
  if (negative) im.erase(0, 1);
  return re + (negative ? " - " : " + ") + im + "i";
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string fn;
  std::string tau;
  std::string tau_d;
  std::string tau_conj_d;
};

int cmd_eval(const EvalArgs& a, const Config& cfg, std::ostream& out) {
  const PrecisionContext ctx = context(cfg);
  const long wb = ctx.working_bits();
  const int given = !a.tau.empty() + !a.tau_d.empty() + !a.tau_conj_d.empty();
  if (given != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of --tau, --tau-d, --tau-conj-d");
  const UpperHalfPoint tau = !a.tau.empty()     ? UpperHalfPoint(parse_tau(a.tau, wb))
                             : !a.tau_d.empty() ? UpperHalfPoint::half_plus_sqrt(Real::from_string(a.tau_d, wb), wb)
                                                : UpperHalfPoint::cayley_sqrt(Real::from_string(a.tau_conj_d, wb), wb);
  const int digits = output_digits(ctx.bits);

  std::vector<std::pair<std::string, Complex>> values;
  if (a.fn == "lambda") {
    values.emplace_back("lambda", lambda_of_tau(tau, ctx));
  } else if (a.fn == "k") {
    values.emplace_back("k", modulus_k(tau, ctx));
  } else if (a.fn == "j") {
    values.emplace_back("j", j_of_tau(tau, ctx));
  } else if (a.fn == "eta") {
    values.emplace_back("eta", eta(tau, ctx));
  } else if (a.fn == "weber") {
    const WeberTriple w = weber_triple(tau, ctx);
    values.emplace_back("f", w.f);
    values.emplace_back("f1", w.f1);
    values.emplace_back("f2", w.f2);
    values.emplace_back("f*f1*f2", (w.f * w.f1 * w.f2).rounded(ctx.bits));
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown --fn \"" + a.fn + "\"");
  }

  if (cfg.json) {
    json doc;
    doc["fn"] = a.fn;
    doc["tau"] = complex_json(tau.tau().rounded(ctx.bits), digits);
    doc["precision_bits"] = ctx.bits;
    json vals = json::object();
    for (const auto& [name, v] : values) vals[name] = complex_json(chop(v, ctx), digits);
    doc["values"] = std::move(vals);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : values) {
      out << (values.size() > 1 ? name + " = " : std::string()) << complex_text(chop(v, ctx), digits) << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct ClosedFormArgs {
  std::string d;
  std::string j;
};

int cmd_closed_forms(const ClosedFormArgs& a, const Config& cfg, std::ostream& out) {
  const PrecisionContext ctx = context(cfg);
  const long wb = ctx.working_bits();
  if (a.d.empty() == a.j.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --d, --j");

  std::optional<Real> d;
  ClosedFormTriple t;
  if (!a.d.empty()) {
    d = Real::from_string(a.d, wb);
    if (*d < Real::from_int(3, wb)) {
      throw Error(ErrorKind::DomainRestriction, "closed forms need d >= 3, got " + a.d);
    }
    // Exact table j when d is a tabulated integer, else the q-series value.
    std::optional<AlgebraicExpr> exact;
    const BigRational dq = d->to_rational();
    if (dq.denominator() == 1 && dq.numerator().fits_slong_p()) {
      try {
        exact = load_tables(cfg).j_exact(dq.numerator().get_si());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownD) throw;
      }
    }
    t = exact ? closed_forms(*exact, ctx)
              : closed_forms(j_of_tau(UpperHalfPoint::half_plus_sqrt(*d, wb), ctx).re(), ctx);
  } else {
    t = closed_forms(Real::from_string(a.j, wb), ctx);
  }

  const int digits = output_digits(ctx.bits);
  std::optional<Real> alpha;
  if (d) alpha = alpha_from_d(*d, ctx);
  Real deviation = t.max_deviation;
  if (alpha) deviation = max(deviation, abs(t.a - *alpha));
  const Complex tilde(Real::from_rational(BigRational(1, 2), ctx.bits), t.a);
  const auto six = six_values_from_closed_form(t.a, ctx);

  if (cfg.json) {
    json doc;
    if (d) doc["d"] = a.d;
    else doc["j"] = a.j;
    doc["precision_bits"] = ctx.bits;
    doc["a"] = t.a.to_decimal(digits);
    doc["b"] = t.b.to_decimal(digits);
    doc["c"] = t.c.to_decimal(digits);
    doc["alpha"] = alpha ? json(alpha->to_decimal(digits)) : json(nullptr);
    doc["max_deviation"] = deviation.to_scientific(6);
    doc["lambda_tilde"] = complex_json(tilde, digits);
    json vals = json::array();
    for (const auto& v : six) vals.push_back(complex_json(v, digits));
    doc["six_values"] = std::move(vals);
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "a     = " << t.a.to_decimal(digits) << "\n";
  out << "b     = " << t.b.to_decimal(digits) << "\n";
  out << "c     = " << t.c.to_decimal(digits) << "\n";
  out << "alpha = " << (alpha ? alpha->to_decimal(digits) : std::string("(needs --d)")) << "\n";
  out << "max deviation = " << deviation.to_scientific(6) << "\n";
  out << "lambda~ = " << complex_text(tilde, digits) << "\n";
  static const char* const kArgs[] = {
      "(1+s)/2", "(s-1)/(s+1)", "2/(1-s)", "-2/(1+s)", "-(s+1)/(s-1)", "(-1+s)/2",
  };
  out << "lambda at the six arguments, s = sqrt(-d):\n";
  for (std::size_t k = 0; k < six.size(); ++k) {
    out << "  " << kArgs[k] << std::string(14 - std::string_view(kArgs[k]).size(), ' ') << complex_text(six[k], digits)
        << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const Config& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.ctx = context(cfg);
  opt.seed = cfg.seed;
  opt.allow_known_discrepancies = cfg.allow_known;
  const TableSet tables = load_tables(cfg);
  const Report report = run_suite(suite, tables, opt);
  out << (cfg.json ? report_to_json(report) : report_to_text(report));
  return report.passed() ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

int cmd_table(const std::string& name, std::optional<long> only_d, const Config& cfg, std::ostream& out) {
  const PrecisionContext ctx = context(cfg);
  const TableSet tables = load_tables(cfg);
  std::vector<const SingularValueRecord*> rows;
  if (name == "weber" || name == "berwick") {
    rows = tables.category(name);
  } else if (name == "lambda") {
    for (const auto& r : tables.records()) {
      if (!r.is_j_record()) rows.push_back(&r);
    }
    std::sort(rows.begin(), rows.end(), [](const auto* x, const auto* y) { return x->d < y->d; });
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown table \"" + name + "\" (weber, berwick, lambda)");
  }
  if (only_d) {
    std::erase_if(rows, [&](const auto* r) { return r->d != *only_d; });
    if (rows.empty()) throw Error(ErrorKind::UnknownD, "no " + name + " record for d = " + std::to_string(*only_d));
  }

  const int digits = output_digits(ctx.bits);
  json doc = json::array();
  for (const auto* r : rows) {
    const auto& forms = r->is_j_record() ? r->j_forms : r->lambda_forms;
    json row;
    row["d"] = r->d;
    row["category"] = r->category;
    json jforms = json::array();
    if (!cfg.json) out << "d = " << r->d << "  [" << r->category << "]\n";
    for (const auto& f : forms) {
      const Complex v = chop(eval_expr(f.expr, ctx), ctx);
      const std::string dsl = serialize(f.expr);
      const std::string value = v.im().is_zero() ? v.re().to_decimal(digits) : complex_text(v, digits);
      if (cfg.json) {
        jforms.push_back(json{{"name", f.name}, {"expr", dsl}, {"value", value}});
      } else {
        out << "  " << f.name << ": " << dsl << "\n";
        out << "  " << std::string(f.name.size(), ' ') << "  = " << value << "\n";
      }
    }
    row["forms"] = std::move(jforms);
    doc.push_back(std::move(row));
  }
  if (cfg.json) out << doc.dump(2) << "\n";
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::ParseError:
    case ErrorKind::DuplicateRecord:
    case ErrorKind::UnknownD:
    case ErrorKind::UnknownSuite:
    case ErrorKind::Io:
      return kUsage;
    default:
      return kDomain;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic lambda singular values: evaluation, closed forms, tables and verification", "ellambda"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--prec", cfg.prec, "Precision in bits (>= 64)")->capture_default_str();
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--seed", cfg.seed, "Seed for sampled suites")->capture_default_str();
  app.add_option("--tables", cfg.tables, "Table directory (default: bundled data)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate lambda, k, j, eta or the Weber triple at tau");
  eval->add_option("--fn", eval_args.fn, "lambda | k | j | eta | weber")->required();
  eval->add_option("--tau", eval_args.tau, "tau as \"a+bi\"");
  eval->add_option("--tau-d", eval_args.tau_d, "tau = (1 + sqrt(-d))/2");
  eval->add_option("--tau-conj-d", eval_args.tau_conj_d, "tau = (sqrt(-d) - 1)/(sqrt(-d) + 1)");

  ClosedFormArgs cf_args;
  auto* closed = app.add_subcommand("closed-forms", "a_d, b_d, c_d, alpha_d and lambda at the six arguments");
  closed->add_option("--d", cf_args.d, "d >= 3");
  closed->add_option("--j", cf_args.j, "j <= 0");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name or \"all\"")->required();
  verify->add_flag("--allow-known-discrepancies", cfg.allow_known, "Registered discrepancies do not fail the run");

  std::string table_name;
  std::optional<long> table_d;
  auto* table = app.add_subcommand("table", "Print a table with exact forms and numeric values");
  table->add_option("--name", table_name, "weber | berwick | lambda")->required();
  table->add_option("--d", table_d, "Only this d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args, cfg, out);
    if (*closed) return cmd_closed_forms(cf_args, cfg, out);
    if (*verify) return cmd_verify(suite, cfg, out);
    if (*table) return cmd_table(table_name, table_d, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace ellambda::cli
