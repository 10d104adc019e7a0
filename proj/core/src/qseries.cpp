#include "ellambda/qseries.hpp"

#include <cmath>

#include "ellambda/error.hpp"

namespace ellambda {

UpperHalfPoint::UpperHalfPoint(Complex tau) : tau_(std::move(tau)) {
  ensure_finite(tau_, "tau");
  if (tau_.im().sign() <= 0) {
    throw Error(ErrorKind::InvalidArgument, "tau must have positive imaginary part, got " + tau_.to_string(10));
  }
}

namespace {

void require_positive(const Real& d) {
  if (d.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "d must be positive, got " + d.to_scientific(10));
}

}  // namespace

UpperHalfPoint UpperHalfPoint::half_plus_sqrt(const Real& d, long bits) {
  require_positive(d);
  const Real root_d = sqrt(d.rounded(bits));
  return UpperHalfPoint(Complex(Real::from_rational(BigRational(1, 2), bits), root_d / 2));
}

UpperHalfPoint UpperHalfPoint::cayley_sqrt(const Real& d, long bits) {
  require_positive(d);
  const Real dd = d.rounded(bits);
  const Real den = dd + 1;
  return UpperHalfPoint(Complex((dd - 1) / den, 2 * sqrt(dd) / den));
}

UpperHalfPoint UpperHalfPoint::sqrt_minus(const Real& d, long bits) {
  require_positive(d);
  return UpperHalfPoint(Complex(Real::zero(bits), sqrt(d.rounded(bits))));
}

NomeBundle::NomeBundle(const UpperHalfPoint& tau, long bits) {
  const Real two_pi = 2 * Real::pi(bits);
  const Complex t = tau.tau().rounded(bits);
  two_pi_i_tau_ = Complex(-two_pi * t.im(), two_pi * t.re());
  q_ = exp(two_pi_i_tau_);
  q_abs_ = exp(two_pi_i_tau_.re());
}

Complex NomeBundle::q_pow(const BigRational& alpha) const {
  if (alpha.is_zero()) return Complex::from_int(1, q_.precision());
  const Real a = Real::from_rational(alpha, q_.precision());
  return exp(two_pi_i_tau_ * a);
}

SeriesTruncation truncation_terms(const Real& q_abs, const PrecisionContext& ctx) {
  if (!(q_abs > Real::zero(64)) || !(q_abs < Real::from_int(1, 64))) {
    throw Error(ErrorKind::InvalidArgument, "|q| must lie in (0, 1), got " + q_abs.to_scientific(10));
  }
  const long bits = std::max<long>(q_abs.precision(), 64);
  const Real log_q = log(q_abs.rounded(bits));
  const Real im_tau = -log_q / (2 * Real::pi(bits));
  if (im_tau < Real::from_double(0.05, bits)) {
    throw Error(ErrorKind::SlowConvergence,
                "im(tau) = " + im_tau.to_decimal(6) + " is below the convergence floor 0.05");
  }
  const long target_exp = -(ctx.bits + ctx.guard_bits);
  const Real one = Real::from_int(1, bits);
  const Real target = Real::pow2(target_exp, bits);
  const Real prefactor = Real::from_int(kTailConstant, bits) / (one - q_abs.rounded(bits));
  const auto tail = [&](long n) { return prefactor * exp(log_q * n / 2); };

  // Solve 64 |q|^(N/2) / (1 - |q|) = 2^-(P+G) in doubles, then fix up exactly.
  const double ld = log_q.to_double();
  const double rhs = static_cast<double>(target_exp) * std::log(2.0) - std::log(prefactor.to_double());
  long n = std::max<long>(1, static_cast<long>(std::ceil(2.0 * rhs / ld)));
  while (n > 1 && tail(n - 1) <= target) --n;
  while (tail(n) > target) ++n;
  return SeriesTruncation{n, tail(n).rounded(64)};
}

namespace {

enum ProductMask : unsigned {
  kPlusInt = 1,    // prod (1 + q^n)
  kPlusHalf = 2,   // prod (1 + q^(n-1/2))
  kMinusInt = 4,   // prod (1 - q^n)
  kMinusHalf = 8,  // prod (1 - q^(n-1/2))
};

struct Products {
  Complex plus_int, plus_half, minus_int, minus_half;
};

struct Series {
  NomeBundle nome;
  long terms;
};

Series prepare(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  ctx.validate();
  NomeBundle nome(tau, ctx.working_bits());
  const long terms = opt.terms > 0 ? opt.terms : truncation_terms(nome.q_abs(), ctx).terms;
  return Series{std::move(nome), terms};
}

Products products(const Series& s, unsigned mask) {
  const long bits = s.nome.q().precision();
  const Complex one = Complex::from_int(1, bits);
  Products out{one, one, one, one};
  const Complex& q = s.nome.q();
  Complex qn = q;
  Complex qh = s.nome.q_pow(BigRational(1, 2));
  for (long n = 1; n <= s.terms; ++n) {
    if (mask & kPlusInt) out.plus_int *= one + qn;
    if (mask & kMinusInt) out.minus_int *= one - qn;
    if (mask & kPlusHalf) out.plus_half *= one + qh;
    if (mask & kMinusHalf) out.minus_half *= one - qh;
    qn *= q;
    qh *= q;
  }
  return out;
}

Complex lambda_working(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  const Series s = prepare(tau, ctx, opt);
  const Products p = products(s, kPlusInt | kPlusHalf);
  const Complex ratio = p.plus_int / p.plus_half;
  return ensure_finite(16 * s.nome.q_pow(BigRational(1, 2)) * pow(ratio, 8), "lambda");
}

}  // namespace

Complex lambda_of_tau(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  return lambda_working(tau, ctx, opt).rounded(ctx.bits);
}

Complex modulus_k(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  const Series s = prepare(tau, ctx, opt);
  const Products p = products(s, kPlusInt | kPlusHalf);
  const Complex ratio = p.plus_int / p.plus_half;
  return ensure_finite(4 * s.nome.q_pow(BigRational(1, 4)) * pow(ratio, 4), "k").rounded(ctx.bits);
}

Complex j_from_lambda(const Complex& lambda, const PrecisionContext& ctx) {
  const long bits = std::max(lambda.precision(), ctx.working_bits());
  const Complex l = lambda.rounded(bits);
  const Complex one_minus = 1 - l;
  const Real cusp = Real::pow2(-(ctx.bits / 2), bits);
  if (l.abs() <= cusp || one_minus.abs() <= cusp) {
    throw Error(ErrorKind::DegenerateLambda, "lambda = " + l.to_string(12) + " is at a cusp");
  }
  const Complex num = pow(1 - l + l * l, 3);
  const Complex den = pow(l * one_minus, 2);
  return ensure_finite(256 * num / den, "j");
}

Complex j_of_tau(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  return j_from_lambda(lambda_working(tau, ctx, opt), ctx).rounded(ctx.bits);
}

Complex j_qexpansion_check(const UpperHalfPoint& tau, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  if (tau.tau().im() < Real::from_int(1, bits)) {
    throw Error(ErrorKind::InvalidArgument, "j q-expansion check needs |q| <= exp(-2 pi), i.e. im(tau) >= 1");
  }
  const NomeBundle nome(tau, bits);
  const Complex& q = nome.q();
  const Complex sum = 1 / q + 744 + q * 196884 + q * q * 21493760;
  return ensure_finite(sum, "j expansion").rounded(ctx.bits);
}

Complex eta(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  const Series s = prepare(tau, ctx, opt);
  const Products p = products(s, kMinusInt);
  return ensure_finite(s.nome.q_pow(BigRational(1, 24)) * p.minus_int, "eta").rounded(ctx.bits);
}

WeberTriple weber_triple(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  const Series s = prepare(tau, ctx, opt);
  const long bits = s.nome.q().precision();
  const Products p = products(s, kPlusInt | kPlusHalf | kMinusHalf);
  const Complex q_m48 = s.nome.q_pow(BigRational(-1, 48));
  const Complex q_24 = s.nome.q_pow(BigRational(1, 24));
  WeberTriple out;
  out.f = ensure_finite(q_m48 * p.plus_half, "weber f").rounded(ctx.bits);
  out.f1 = ensure_finite(q_m48 * p.minus_half, "weber f1").rounded(ctx.bits);
  out.f2 = ensure_finite(sqrt(Real::from_int(2, bits)) * q_24 * p.plus_int, "weber f2").rounded(ctx.bits);
  return out;
}

Complex lambda_log_derivative(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt) {
  const Series s = prepare(tau, ctx, opt);
  const long bits = s.nome.q().precision();
  const Products p = products(s, kMinusInt | kMinusHalf);
  const Complex pi_i = Complex::i(bits) * Real::pi(bits);
  const Complex value = pi_i * pow(p.minus_int, 4) * pow(p.minus_half, 8);
  return ensure_finite(value, "lambda'/lambda").rounded(ctx.bits);
}

}  // namespace ellambda
