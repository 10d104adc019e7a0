#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/precision.hpp"
#include "ellambda/quad_field.hpp"
#include "ellambda/rational.hpp"
#include "ellambda/verdict.hpp"

namespace ellambda {

enum class NodeKind { Rational, ImagUnit, Add, Mul, Neg, Sqrt, RealRoot, Pow };

/// Immutable nested-radical expression. Subtrees are shared, so building
/// a_d, b_d, c_d from one j_d subtree stores it once.
///
/// Semantics fixed at evaluation time:
///  - sqrt is the principal complex square root;
///  - root3 is the real, sign-preserving cube root of a real argument;
///  - pow with exponent p/q (q in {2,3,6}) means (real q-th root of a
///    positive real base)^p; integer exponents work on any non-zero base.
class AlgebraicExpr {
 public:
  struct Node;

  AlgebraicExpr() : AlgebraicExpr(rational(0)) {}

  static AlgebraicExpr rational(BigRational value);
  static AlgebraicExpr integer(long value) { return rational(BigRational(value)); }
  static AlgebraicExpr imag_unit();
  static AlgebraicExpr add(std::vector<AlgebraicExpr> terms);
  static AlgebraicExpr mul(std::vector<AlgebraicExpr> factors);
  static AlgebraicExpr neg(AlgebraicExpr child);
  static AlgebraicExpr sqrt(AlgebraicExpr child);
  static AlgebraicExpr root3(AlgebraicExpr child);
  static AlgebraicExpr pow(AlgebraicExpr base, BigRational exponent);

  NodeKind kind() const;
  const std::vector<AlgebraicExpr>& children() const;
  /// Value of a Rational node, exponent of a Pow node.
  const BigRational& rational_value() const;
  const Node* node() const { return node_.get(); }

  int depth() const;
  bool contains_imag_unit() const;

  friend AlgebraicExpr operator+(const AlgebraicExpr& a, const AlgebraicExpr& b) { return add({a, b}); }
  friend AlgebraicExpr operator-(const AlgebraicExpr& a, const AlgebraicExpr& b) { return add({a, neg(b)}); }
  friend AlgebraicExpr operator*(const AlgebraicExpr& a, const AlgebraicExpr& b) { return mul({a, b}); }
  friend AlgebraicExpr operator-(const AlgebraicExpr& a) { return neg(a); }

 private:
  explicit AlgebraicExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct AlgebraicExpr::Node {
  NodeKind kind;
  BigRational value;
  std::vector<AlgebraicExpr> children;
  int depth = 1;
  bool has_imag = false;
};

/// Numeric value of `e`. Internally evaluated at ctx.working_bits() and
/// rounded to ctx.bits.
Complex eval_expr(const AlgebraicExpr& e, const PrecisionContext& ctx);

/// Same as eval_expr but returns the working-precision value unrounded.
Complex eval_expr_working(const AlgebraicExpr& e, const PrecisionContext& ctx);

/// Numeric equality with escalation: evaluates both sides at P and 2P (and
/// further up to max_escalation_bits while the outcome is ambiguous).
/// Match when |e1 - e2| <= 2^-(P-2G) * max(1, |e1|) at both precisions;
/// mismatch when the residual stays above 2^-(P/2) * max(1, |e1|).
Verdict expr_equal_numeric(const AlgebraicExpr& e1, const AlgebraicExpr& e2, const PrecisionContext& ctx);

/// Exact value of `e` in Q(sqrt m) when every radical in it is a square root
/// of a rational of the form m*s^2 or s^2; nullopt otherwise.
std::optional<QuadFieldElem> to_quad_field(const AlgebraicExpr& e, long m);

/// If `e` is literally add[rat("1/2"), mul[i, X]] (in either order, X free of
/// i) returns X.
std::optional<AlgebraicExpr> split_half_plus_i(const AlgebraicExpr& e);

// ---------------------------------------------------------------------------
// Text DSL
//
//   rat("p/q")  i  add[e, ...]  mul[e, ...]  neg[e]  sqrt[e]  root3[e]
//   pow[e, "p/q"]  @name (only with bindings)
//
// Whitespace and '#' comments are ignored between tokens.

std::string serialize(const AlgebraicExpr& e);

/// Named subexpressions usable as `@name` while parsing table files.
using ExprBindings = std::map<std::string, AlgebraicExpr, std::less<>>;

AlgebraicExpr parse_expr(std::string_view text, std::string_view source_name = "<expr>");
AlgebraicExpr parse_expr(std::string_view text, const ExprBindings& bindings,
                         std::string_view source_name = "<expr>");

}  // namespace ellambda
