#include "ellambda/transforms.hpp"

#include "ellambda/error.hpp"
#include "ellambda/qseries.hpp"

namespace ellambda {

LambdaOrbit six_lambda_values(const Complex& lam, const PrecisionContext& ctx) {
  const long bits = std::max(lam.precision(), ctx.working_bits());
  const Complex l = lam.rounded(bits);
  const Complex one_minus = 1 - l;
  const Real cusp = Real::pow2(-(ctx.bits / 2), bits);
  if (l.abs() <= cusp || one_minus.abs() <= cusp) {
    throw Error(ErrorKind::DegenerateLambda, "lambda = " + l.to_string(12) + " is at a cusp");
  }
  LambdaOrbit orbit{{
      l,
      (l - 1) / l,
      1 / one_minus,
      one_minus,
      1 / l,
      l / (l - 1),
  }};
  for (auto& v : orbit.values) v = v.rounded(ctx.bits);
  return orbit;
}

MultisetMatch match_multiset(const std::vector<Complex>& a, const std::vector<Complex>& b, const Real& rel_tol) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidArgument, "multisets differ in size");
  }
  MultisetMatch out;
  out.max_residual = Real::zero(rel_tol.precision());
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    std::size_t best = b.size();
    Real best_res;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      Real res = relative_residual(x, b[k]);
      if (best == b.size() || res < best_res) {
        best = k;
        best_res = std::move(res);
      }
    }
    used[best] = true;
    out.max_residual = max(out.max_residual, best_res);
  }
  out.matched = out.max_residual <= rel_tol;
  return out;
}

Complex landen_halved_modulus_sq(const Complex& k) {
  const Complex denom = 1 + k;
  if (denom.abs() <= Real::pow2(-(k.precision() / 2), k.precision())) {
    throw Error(ErrorKind::PoleAtMinusOne, "Landen transform has a pole at k = -1");
  }
  return ensure_finite(4 * k / (denom * denom), "landen");
}

Real alpha_from_d(const Real& d, const PrecisionContext& ctx) {
  const PrecisionContext wide(ctx.working_bits(), ctx.guard_bits);
  const long bits = wide.working_bits();
  const Complex lam = lambda_of_tau(UpperHalfPoint::sqrt_minus(d, bits), wide);
  const Real& l = lam.re();
  const Real one = Real::from_int(1, bits);
  if (abs(lam.im()) > ctx.tolerance() * max(one, abs(l)) || l.sign() <= 0 || !(l < one)) {
    throw Error(ErrorKind::ConsistencyFailure,
                "lambda(sqrt(-d)) = " + lam.to_string(12) + " is not a real number in (0, 1)");
  }
  const Real ratio = (one - l) / l;
  return ((sqrt(ratio) - sqrt(one / ratio)) / 4).rounded(ctx.bits);
}

Complex lambda_tilde_numeric(const Real& d, const PrecisionContext& ctx) {
  const Complex direct = lambda_of_tau(UpperHalfPoint::cayley_sqrt(d, ctx.working_bits()), ctx);
  const Real alpha = alpha_from_d(d, ctx);
  const Complex via_alpha(Real::from_rational(BigRational(1, 2), ctx.bits), alpha);
  const Real res = relative_residual(direct, via_alpha);
  if (res > ctx.tolerance()) {
    throw Error(ErrorKind::ConsistencyFailure,
                "direct lambda " + direct.to_string(20) + " disagrees with 1/2 + i alpha_d " + via_alpha.to_string(20));
  }
  return direct;
}

Real j_from_alpha(const Real& alpha) {
  const Real a2 = 4 * alpha * alpha;
  const Real num = pow(a2 - 3, 3);
  const Real den = pow(a2 + 1, 2);
  return -64 * num / den;
}

}  // namespace ellambda
