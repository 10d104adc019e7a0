#include "ellambda/expr.hpp"

#include <algorithm>
#include <unordered_map>

#include "ellambda/error.hpp"

namespace ellambda {

std::string_view status_name(VerdictStatus status) noexcept {
  switch (status) {
    case VerdictStatus::Match: return "match";
    case VerdictStatus::Mismatch: return "mismatch";
    case VerdictStatus::ExpectedDiscrepancy: return "expected-discrepancy";
  }
  return "mismatch";
}

VerdictStatus parse_status(std::string_view name) {
  if (name == "match") return VerdictStatus::Match;
  if (name == "mismatch") return VerdictStatus::Mismatch;
  if (name == "expected-discrepancy") return VerdictStatus::ExpectedDiscrepancy;
  throw Error(ErrorKind::InvalidArgument, "unknown verdict status \"" + std::string(name) + "\"");
}

// ---------------------------------------------------------------------------
// Construction

namespace {

std::shared_ptr<const AlgebraicExpr::Node> make_node(NodeKind kind, BigRational value,
                                                     std::vector<AlgebraicExpr> children) {
  auto node = std::make_shared<AlgebraicExpr::Node>();
  node->kind = kind;
  node->value = std::move(value);
  int depth = 0;
  bool has_imag = kind == NodeKind::ImagUnit;
  for (const auto& c : children) {
    depth = std::max(depth, c.depth());
    has_imag = has_imag || c.contains_imag_unit();
  }
  node->depth = depth + 1;
  node->has_imag = has_imag;
  node->children = std::move(children);
  return node;
}

}  // namespace

AlgebraicExpr AlgebraicExpr::rational(BigRational value) {
  return AlgebraicExpr(make_node(NodeKind::Rational, std::move(value), {}));
}

AlgebraicExpr AlgebraicExpr::imag_unit() { return AlgebraicExpr(make_node(NodeKind::ImagUnit, 0, {})); }

AlgebraicExpr AlgebraicExpr::add(std::vector<AlgebraicExpr> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "add[] needs at least one term");
  return AlgebraicExpr(make_node(NodeKind::Add, 0, std::move(terms)));
}

AlgebraicExpr AlgebraicExpr::mul(std::vector<AlgebraicExpr> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "mul[] needs at least one factor");
  return AlgebraicExpr(make_node(NodeKind::Mul, 0, std::move(factors)));
}

AlgebraicExpr AlgebraicExpr::neg(AlgebraicExpr child) {
  return AlgebraicExpr(make_node(NodeKind::Neg, 0, {std::move(child)}));
}

AlgebraicExpr AlgebraicExpr::sqrt(AlgebraicExpr child) {
  return AlgebraicExpr(make_node(NodeKind::Sqrt, 0, {std::move(child)}));
}

AlgebraicExpr AlgebraicExpr::root3(AlgebraicExpr child) {
  return AlgebraicExpr(make_node(NodeKind::RealRoot, 3, {std::move(child)}));
}

AlgebraicExpr AlgebraicExpr::pow(AlgebraicExpr base, BigRational exponent) {
  const mpz_class den = exponent.denominator();
  if (den != 1 && den != 2 && den != 3 && den != 6) {
    throw Error(ErrorKind::InvalidArgument,
                "pow exponent denominator must be 1, 2, 3 or 6, got " + exponent.to_string());
  }
  if (!exponent.numerator().fits_slong_p()) {
    throw Error(ErrorKind::Overflow, "pow exponent numerator too large");
  }
  return AlgebraicExpr(make_node(NodeKind::Pow, std::move(exponent), {std::move(base)}));
}

NodeKind AlgebraicExpr::kind() const { return node_->kind; }
const std::vector<AlgebraicExpr>& AlgebraicExpr::children() const { return node_->children; }
const BigRational& AlgebraicExpr::rational_value() const { return node_->value; }
int AlgebraicExpr::depth() const { return node_->depth; }
bool AlgebraicExpr::contains_imag_unit() const { return node_->has_imag; }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const PrecisionContext& ctx)
      : bits_(ctx.working_bits()), real_threshold_(ctx.tolerance()) {}

  Complex eval(const AlgebraicExpr& e) {
    const auto* key = e.node();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Complex value = compute(e);
    memo_.emplace(key, value);
    return value;
  }

 private:
  // Real-detection: |im| <= 2^-(P-2G) * max(1, |re|).
  const Real& require_real(const Complex& z, std::string_view what) {
    const Real scale = max(abs(z.re()), Real::from_int(1, bits_));
    if (abs(z.im()) > real_threshold_ * scale) {
      throw Error(ErrorKind::RealRootOfNonReal,
                  std::string(what) + " of non-real value " + z.to_string(12));
    }
    return z.re();
  }

  Complex compute(const AlgebraicExpr& e) {
    const auto& kids = e.children();
    switch (e.kind()) {
      case NodeKind::Rational:
        return Complex::from_rational(e.rational_value(), bits_);
      case NodeKind::ImagUnit:
        return Complex::i(bits_);
      case NodeKind::Add: {
        Complex sum = eval(kids.front());
        for (std::size_t k = 1; k < kids.size(); ++k) sum += eval(kids[k]);
        return sum;
      }
      case NodeKind::Mul: {
        Complex prod = eval(kids.front());
        for (std::size_t k = 1; k < kids.size(); ++k) prod *= eval(kids[k]);
        return prod;
      }
      case NodeKind::Neg:
        return -eval(kids.front());
      case NodeKind::Sqrt:
        return ellambda::sqrt(eval(kids.front()));
      case NodeKind::RealRoot: {
        const Complex arg = eval(kids.front());
        return Complex(ellambda::cbrt(require_real(arg, "root3")));
      }
      case NodeKind::Pow: {
        const Complex base = eval(kids.front());
        const BigRational& exponent = e.rational_value();
        const long p = exponent.numerator().get_si();
        if (exponent.is_integer()) {
          if (base.is_zero() && p < 0) throw Error(ErrorKind::Overflow, "negative power of zero");
          return ensure_finite(ellambda::pow(base, p), "pow");
        }
        const Real& re = require_real(base, "fractional pow");
        if (re.sign() <= 0) {
          throw Error(ErrorKind::RealRootOfNonReal,
                      "fractional pow needs a positive real base, got " + re.to_scientific(12));
        }
        const unsigned long q = exponent.denominator().get_ui();
        return Complex(ellambda::pow(root(re, q), p));
      }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown node kind");
  }

  long bits_;
  Real real_threshold_;
  std::unordered_map<const AlgebraicExpr::Node*, Complex> memo_;
};

}  // namespace

Complex eval_expr_working(const AlgebraicExpr& e, const PrecisionContext& ctx) {
  Evaluator evaluator(ctx);
  return ensure_finite(evaluator.eval(e), "eval_expr");
}

Complex eval_expr(const AlgebraicExpr& e, const PrecisionContext& ctx) {
  return eval_expr_working(e, ctx).rounded(ctx.bits);
}

Verdict expr_equal_numeric(const AlgebraicExpr& e1, const AlgebraicExpr& e2, const PrecisionContext& ctx) {
  struct Sample {
    Real residual;
    Real scale;
  };
  std::map<long, Sample> cache;
  const auto sample = [&](long bits) -> const Sample& {
    auto it = cache.find(bits);
    if (it == cache.end()) {
      const PrecisionContext local = ctx.with_bits(bits);
      const Complex v1 = eval_expr_working(e1, local);
      const Complex v2 = eval_expr_working(e2, local);
      Real scale = max(v1.abs(), Real::from_int(1, local.working_bits()));
      it = cache.emplace(bits, Sample{(v1 - v2).abs(), std::move(scale)}).first;
    }
    return it->second;
  };

  const Real reject = Real::pow2(-(ctx.bits / 2), ctx.working_bits());
  for (long bits = ctx.bits; 2 * bits <= ctx.max_escalation_bits; bits *= 2) {
    const Sample& lo = sample(bits);
    const Sample& hi = sample(2 * bits);
    const Real tol_lo = ctx.with_bits(bits).tolerance();
    const Real tol_hi = ctx.with_bits(2 * bits).tolerance();
    Verdict v;
    v.residual_abs = hi.residual.rounded(64);
    v.residual_rel = (hi.residual / hi.scale).rounded(64);
    v.precision_used = 2 * bits;
    if (lo.residual <= tol_lo * lo.scale && hi.residual <= tol_hi * hi.scale) {
      v.status = VerdictStatus::Match;
      return v;
    }
    if (lo.residual > reject * lo.scale && hi.residual > reject * hi.scale) {
      v.status = VerdictStatus::Mismatch;
      return v;
    }
  }
  throw Error(ErrorKind::EscalationExhausted,
              "residual stayed between accept and reject thresholds up to " +
                  std::to_string(ctx.max_escalation_bits) + " bits");
}

// ---------------------------------------------------------------------------
// Exact reduction into a quadratic field

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return mpq_class(sn, sd);
}

std::optional<mpq_class> rational_cbrt(const mpq_class& r) {
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  mpz_class cn, cd;
  if (mpz_root(cn.get_mpz_t(), num.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(cd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return std::nullopt;
  return mpq_class(cn, cd);
}

std::optional<QuadFieldElem> reduce(const AlgebraicExpr& e, long m) {
  const auto& kids = e.children();
  try {
    switch (e.kind()) {
      case NodeKind::Rational:
        return QuadFieldElem(e.rational_value());
      case NodeKind::ImagUnit:
        return std::nullopt;
      case NodeKind::Add:
      case NodeKind::Mul: {
        auto acc = reduce(kids.front(), m);
        for (std::size_t k = 1; acc && k < kids.size(); ++k) {
          auto next = reduce(kids[k], m);
          if (!next) return std::nullopt;
          if (e.kind() == NodeKind::Add) {
            *acc += *next;
          } else {
            *acc *= *next;
          }
        }
        return acc;
      }
      case NodeKind::Neg: {
        auto v = reduce(kids.front(), m);
        if (v) return -*v;
        return std::nullopt;
      }
      case NodeKind::Sqrt: {
        auto v = reduce(kids.front(), m);
        if (!v || !v->is_rational()) return std::nullopt;
        const mpq_class& r = v->a().get();
        if (auto s = rational_sqrt(r)) return QuadFieldElem(BigRational(*s));
        if (m < 2) return std::nullopt;
        if (auto s = rational_sqrt(r / mpq_class(m))) return QuadFieldElem(0, BigRational(*s), m);
        return std::nullopt;
      }
      case NodeKind::RealRoot: {
        auto v = reduce(kids.front(), m);
        if (!v || !v->is_rational()) return std::nullopt;
        if (auto c = rational_cbrt(v->a().get())) return QuadFieldElem(BigRational(*c));
        return std::nullopt;
      }
      case NodeKind::Pow: {
        if (!e.rational_value().is_integer()) return std::nullopt;
        auto v = reduce(kids.front(), m);
        if (!v) return std::nullopt;
        return v->pow(e.rational_value().numerator().get_si());
      }
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<QuadFieldElem> to_quad_field(const AlgebraicExpr& e, long m) { return reduce(e, m); }

std::optional<AlgebraicExpr> split_half_plus_i(const AlgebraicExpr& e) {
  if (e.kind() != NodeKind::Add || e.children().size() != 2) return std::nullopt;
  for (int first = 0; first < 2; ++first) {
    const AlgebraicExpr& half = e.children()[first];
    const AlgebraicExpr& rest = e.children()[1 - first];
    if (half.kind() != NodeKind::Rational || half.rational_value() != BigRational(1, 2)) continue;
    if (rest.kind() != NodeKind::Mul || rest.children().size() != 2) continue;
    for (int k = 0; k < 2; ++k) {
      const AlgebraicExpr& unit = rest.children()[k];
      const AlgebraicExpr& real_part = rest.children()[1 - k];
      if (unit.kind() == NodeKind::ImagUnit && !real_part.contains_imag_unit()) return real_part;
    }
  }
  return std::nullopt;
}

}  // namespace ellambda
