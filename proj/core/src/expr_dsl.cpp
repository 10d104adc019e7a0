#include <string>

#include "dsl_lexer.hpp"
#include "ellambda/expr.hpp"

namespace ellambda {

namespace {

void write(const AlgebraicExpr& e, std::string& out) {
  const auto list = [&](std::string_view head) {
    out += head;
    out += '[';
    bool first = true;
    for (const auto& c : e.children()) {
      if (!first) out += ", ";
      first = false;
      write(c, out);
    }
    out += ']';
  };
  switch (e.kind()) {
    case NodeKind::Rational:
      out += "rat(\"" + e.rational_value().to_string() + "\")";
      return;
    case NodeKind::ImagUnit: out += 'i'; return;
    case NodeKind::Add: list("add"); return;
    case NodeKind::Mul: list("mul"); return;
    case NodeKind::Neg: list("neg"); return;
    case NodeKind::Sqrt: list("sqrt"); return;
    case NodeKind::RealRoot: list("root3"); return;
    case NodeKind::Pow:
      out += "pow[";
      write(e.children().front(), out);
      out += ", \"" + e.rational_value().to_string() + "\"]";
      return;
  }
}

}  // namespace

std::string serialize(const AlgebraicExpr& e) {
  std::string out;
  write(e, out);
  return out;
}

namespace detail {

AlgebraicExpr parse_expr_tokens(Lexer& lx, const ExprBindings* bindings) {
  if (lx.is_punct('@')) {
    const Token at = lx.next();
    if (bindings == nullptr) lx.fail(at, "'@' references are only allowed in table files");
    const Token name = lx.expect(TokenKind::Ident, "binding name");
    const auto it = bindings->find(name.text);
    if (it == bindings->end()) lx.fail(name, "unknown binding @" + name.text);
    return it->second;
  }

  const Token head = lx.expect(TokenKind::Ident, "expression");
  const auto rational_arg = [&](const Token& t) {
    try {
      return BigRational::parse(t.text);
    } catch (const Error& err) {
      lx.fail(t, "bad rational \"" + t.text + "\"");
    }
  };

  if (head.text == "i") return AlgebraicExpr::imag_unit();
  if (head.text == "rat") {
    lx.expect_punct('(');
    const Token value = lx.expect(TokenKind::String, "quoted rational");
    lx.expect_punct(')');
    return AlgebraicExpr::rational(rational_arg(value));
  }

  lx.expect_punct('[');
  std::vector<AlgebraicExpr> args;
  if (head.text == "pow") {
    args.push_back(parse_expr_tokens(lx, bindings));
    lx.expect_punct(',');
    const Token exponent = lx.expect(TokenKind::String, "quoted exponent");
    lx.expect_punct(']');
    try {
      return AlgebraicExpr::pow(args.front(), rational_arg(exponent));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      lx.fail(exponent, err.what());
    }
  }

  if (!lx.is_punct(']')) {
    args.push_back(parse_expr_tokens(lx, bindings));
    while (lx.is_punct(',')) {
      lx.next();
      args.push_back(parse_expr_tokens(lx, bindings));
    }
  }
  const Token close = lx.peek();
  lx.expect_punct(']');

  const auto unary = [&]() -> AlgebraicExpr {
    if (args.size() != 1) lx.fail(close, head.text + "[] takes exactly one argument");
    return args.front();
  };
  if (head.text == "add" || head.text == "mul") {
    if (args.empty()) lx.fail(close, head.text + "[] needs at least one argument");
    return head.text == "add" ? AlgebraicExpr::add(std::move(args)) : AlgebraicExpr::mul(std::move(args));
  }
  if (head.text == "neg") return AlgebraicExpr::neg(unary());
  if (head.text == "sqrt") return AlgebraicExpr::sqrt(unary());
  if (head.text == "root3") return AlgebraicExpr::root3(unary());
  lx.fail(head, "unknown operator '" + head.text + "'");
}

}  // namespace detail

namespace {

AlgebraicExpr parse_all(std::string_view text, const ExprBindings* bindings, std::string_view source) {
  detail::Lexer lx(text, source);
  AlgebraicExpr e = detail::parse_expr_tokens(lx, bindings);
  if (!lx.at_end()) lx.fail(lx.peek(), "trailing input " + detail::Lexer::describe(lx.peek()));
  return e;
}

}  // namespace

AlgebraicExpr parse_expr(std::string_view text, std::string_view source_name) {
  return parse_all(text, nullptr, source_name);
}

AlgebraicExpr parse_expr(std::string_view text, const ExprBindings& bindings, std::string_view source_name) {
  return parse_all(text, &bindings, source_name);
}

}  // namespace ellambda
