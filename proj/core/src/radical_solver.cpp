#include "ellambda/radical_solver.hpp"

#include <algorithm>

#include "ellambda/error.hpp"

namespace ellambda {

Complex MonicCubic::p() const { return b - a * a / 3; }

Complex MonicCubic::q() const { return c - a * b / 3 + 2 * pow(a, 3) / 27; }

Complex MonicCubic::discriminant() const {
  const Complex pp = p();
  const Complex qq = q();
  return -4 * pow(pp, 3) - 27 * qq * qq;
}

namespace {

Complex omega(long bits) {
  const Real half = Real::from_rational(BigRational(1, 2), bits);
  return Complex(-half, sqrt(Real::from_int(3, bits)) / 2);
}

Real one_or(const Real& x) { return max(Real::from_int(1, x.precision()), x); }

// Index of the root with the smallest imaginary part; NonRealResult if even
// that one is not real to tolerance.
const Complex& real_root(const std::array<Complex, 3>& roots, const PrecisionContext& ctx, std::string_view what) {
  const Complex* best = &roots[0];
  for (const auto& r : roots) {
    if (abs(r.im()) < abs(best->im())) best = &r;
  }
  if (abs(best->im()) > ctx.tolerance() * one_or(abs(best->re()))) {
    throw Error(ErrorKind::NonRealResult, std::string(what) + " has no real root: " + best->to_string(12));
  }
  return *best;
}

void require_nonpositive(const Real& j, std::string_view what) {
  if (j.sign() > 0) {
    throw Error(ErrorKind::DomainRestriction,
                std::string(what) + " needs j <= 0, got " + j.to_scientific(12));
  }
}

}  // namespace

CubicRoots cardano_roots(const MonicCubic& cubic, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  const MonicCubic m{cubic.a.rounded(bits), cubic.b.rounded(bits), cubic.c.rounded(bits)};
  for (const auto* coeff : {&m.a, &m.b, &m.c}) ensure_finite(*coeff, "cubic coefficient");
  const Complex p = m.p();
  const Complex q = m.q();
  const Complex disc = m.discriminant();
  const Complex shift = m.a / 3;
  const Real tol = ctx.tolerance();
  const Real p_abs = p.abs();
  const Real q_abs = q.abs();

  CubicRoots out;
  std::array<Complex, 3> y;
  const Real scale = max(one_or(pow(p_abs, 3)), q_abs * q_abs);
  if (disc.abs() <= tol * scale) {
    out.degenerate = true;
    if (p_abs <= Real::pow2(-(ctx.bits / 2), bits) * one_or(m.a.abs() * m.a.abs())) {
      y = {Complex::zero(bits), Complex::zero(bits), Complex::zero(bits)};
      out.u = Complex::zero(bits);
      out.v = Complex::zero(bits);
    } else {
      const Complex single = 3 * q / p;
      const Complex twice = -3 * q / (2 * p);
      y = {single, twice, twice};
      out.u = cbrt(-q / 2);
      out.v = -p / (3 * out.u);
    }
  } else {
    const Complex s = sqrt(-disc / 108);
    const Complex r1 = -q / 2 + s;
    const Complex r2 = -q / 2 - s;
    out.u = cbrt(r1.abs() >= r2.abs() ? r1 : r2);
    out.v = -p / (3 * out.u);
    const Complex w = omega(bits);
    const Complex w2 = w * w;
    y = {out.u + out.v, w * out.u + w2 * out.v, w2 * out.u + w * out.v};
  }
  for (std::size_t k = 0; k < 3; ++k) out.roots[k] = ensure_finite(y[k] - shift, "cardano root").rounded(ctx.bits);
  out.u = out.u.rounded(ctx.bits);
  out.v = out.v.rounded(ctx.bits);
  return out;
}

std::array<Complex, 7> sextic_coeffs(const Complex& j) {
  const long bits = j.precision();
  const auto k = [bits](long v) { return Complex::from_int(v, bits); };
  return {k(256), k(-768), 1536 - j, 2 * j - 1792, 1536 - j, k(-768), k(256)};
}

QuadPoly sextic_coeffs(const QuadFieldElem& j) {
  const QuadFieldElem two(2);
  return {QuadFieldElem(256), QuadFieldElem(-768), QuadFieldElem(1536) - j, two * j - QuadFieldElem(1792),
          QuadFieldElem(1536) - j, QuadFieldElem(-768), QuadFieldElem(256)};
}

Complex sextic_eval(const Complex& j, const Complex& lam) {
  const long bits = std::max(j.precision(), lam.precision());
  const auto coeffs = sextic_coeffs(j.rounded(bits));
  Complex acc = Complex::zero(bits);
  for (const auto& c : coeffs) acc = acc * lam + c;
  return acc;
}

std::pair<Complex, Complex> r_plus_minus(const Complex& j, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  const Complex jj = j.rounded(bits);
  const Complex half3 = Complex::from_rational(BigRational(3, 2), bits);
  const Complex s = sqrt(jj - 1728) / 16;
  const Complex plus = half3 + s;
  const Complex minus = half3 - s;
  for (const auto* r : {&plus, &minus}) {
    const Complex back = 256 * (*r * *r - 3 * *r + 9);
    if (relative_residual(back, jj) > ctx.tolerance()) {
      throw Error(ErrorKind::ConsistencyFailure, "r does not satisfy 256 (r^2 - 3r + 9) = j");
    }
  }
  return {plus.rounded(ctx.bits), minus.rounded(ctx.bits)};
}

Complex simplest_cubic_eval(const Complex& lam, const Complex& r) {
  return ((lam - r) * lam + (r - 3)) * lam + 1;
}

std::array<Complex, 3> simplest_cubic_roots(const Complex& r, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  const Complex rr = r.rounded(bits);
  const CubicRoots roots = cardano_roots(MonicCubic{-rr, rr - 3, Complex::from_int(1, bits)}, ctx);
  std::vector<Complex> mapped;
  for (const auto& a : roots.roots) mapped.push_back((a - 1) / a);
  const auto check = match_multiset(mapped, {roots.roots.begin(), roots.roots.end()}, ctx.tolerance());
  if (!check.matched) {
    throw Error(ErrorKind::ConsistencyFailure,
                "roots of the simplest cubic are not closed under l -> (l-1)/l (residual " +
                    check.max_residual.to_scientific(6) + ")");
  }
  return roots.roots;
}

std::array<Complex, 3> weber_cubic_roots(const Complex& j, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  const Complex k = j.rounded(bits) / 256;
  return cardano_roots(MonicCubic{Complex::zero(bits), -k, k}, ctx).roots;
}

WeberCubicRoot weber_cubic_root(const Real& j, const PrecisionContext& ctx) {
  require_nonpositive(j, "weber_cubic_root");
  const long bits = ctx.working_bits();
  WeberCubicRoot out;
  if (j.is_zero()) {
    out.z = Real::zero(ctx.bits);
  } else {
    out.z = real_root(weber_cubic_roots(Complex(j), ctx), ctx, "Weber cubic").re();
  }
  if (out.z.sign() < 0 || !(out.z < Real::from_int(1, bits))) {
    throw Error(ErrorKind::ConsistencyFailure, "Weber cubic root " + out.z.to_decimal(20) + " is outside [0, 1)");
  }
  const ClosedFormExprs exprs = closed_form_exprs(AlgebraicExpr::rational(j.to_rational()));
  out.printed_z = eval_expr(exprs.z_printed, ctx).re();
  out.printed_residual = abs(out.z - out.printed_z).rounded(64);
  out.printed_matches = out.printed_residual <= ctx.tolerance() * one_or(abs(out.z));
  return out;
}

TschirnhausRoot tschirnhaus_root(const Real& j, const PrecisionContext& ctx) {
  require_nonpositive(j, "tschirnhaus_root");
  const long bits = ctx.working_bits();
  const Real jj = j.rounded(bits);
  TschirnhausRoot out;
  if (jj.is_zero()) {
    out.t = Real::zero(ctx.bits);
  } else {
    // 256 t^3 + j (2 - j/768) t - j (1 - j/384 + j^2/884736), made monic.
    const Real lin = jj * (2 - jj / 768) / 256;
    const Real con = -jj * (1 - jj / 384 + jj * jj / 884736) / 256;
    const auto roots = cardano_roots(MonicCubic{Complex::zero(bits), Complex(lin), Complex(con)}, ctx);
    out.t = real_root(roots.roots, ctx, "Tschirnhaus cubic").re();
  }
  const ClosedFormExprs exprs = closed_form_exprs(AlgebraicExpr::rational(j.to_rational()));
  out.closed_form_t = eval_expr(exprs.t, ctx).re();
  out.residual = abs(out.t - out.closed_form_t).rounded(64);
  return out;
}

ClosedFormExprs closed_form_exprs(const AlgebraicExpr& j) {
  using E = AlgebraicExpr;
  const auto n = [](long v) { return E::integer(v); };
  const auto frac = [](long p, long q) { return E::rational(BigRational(p, q)); };
  const E sqrt3 = E::sqrt(n(3));
  const E j2 = E::pow(j, 2);
  const E j3 = E::pow(j, 3);

  ClosedFormExprs out;
  out.j = j;
  out.beta = E::sqrt(E::add({n(1728) * j2, -j3}));
  const E shift = n(24) * sqrt3 * j;
  const E cube_a = E::root3(out.beta - shift);
  const E cube_b = E::root3(out.beta + shift);

  out.a = frac(1, 48) * E::add({E::sqrt(n(1728) - j), cube_a, cube_b});

  const E inner = sqrt3 * (cube_a - cube_b) + n(24);
  out.b = frac(1, 48) * E::sqrt(E::add({E::pow(inner, 2), n(1152), -(n(9) * j)}));

  const E base = E::add({n(-884736) * j, n(2304) * j2, -j3});
  const E twist = n(12288) * sqrt3 * out.beta;
  out.t = frac(-1, 768) * (E::root3(base - twist) + E::root3(base + twist));

  out.c = frac(1, 48) * E::sqrt(E::add({n(-2304) * out.t, n(1728), -(n(3) * j)}));

  out.z_printed = frac(1, 48) * (cube_a - cube_b);
  return out;
}

ClosedFormTriple closed_forms(const AlgebraicExpr& j, const PrecisionContext& ctx) {
  const Complex jv = eval_expr_working(j, ctx);
  if (abs(jv.im()) > ctx.tolerance() * one_or(abs(jv.re()))) {
    throw Error(ErrorKind::DomainRestriction, "closed forms need a real j, got " + jv.to_string(12));
  }
  if (jv.re() > ctx.tolerance()) {
    throw Error(ErrorKind::DomainRestriction, "closed forms need j <= 0, got " + jv.re().to_scientific(12));
  }
  ClosedFormTriple out{closed_form_exprs(j), {}, {}, {}, {}};
  const auto real_value = [&](const AlgebraicExpr& e, std::string_view name) {
    const Complex v = eval_expr_working(e, ctx);
    if (abs(v.im()) > ctx.tolerance() * one_or(abs(v.re()))) {
      throw Error(ErrorKind::NonRealResult, std::string(name) + " is not real: " + v.to_string(12));
    }
    return v.re();
  };
  const Real a = real_value(out.exprs.a, "a");
  const Real b = real_value(out.exprs.b, "b");
  const Real c = real_value(out.exprs.c, "c");
  out.max_deviation = max(abs(a - b), abs(a - c)).rounded(64);
  out.a = a.rounded(ctx.bits);
  out.b = b.rounded(ctx.bits);
  out.c = c.rounded(ctx.bits);
  return out;
}

ClosedFormTriple closed_forms(const Real& j, const PrecisionContext& ctx) {
  require_nonpositive(j, "closed_forms");
  return closed_forms(AlgebraicExpr::rational(j.to_rational()), ctx);
}

std::array<Complex, 6> six_values_from_closed_form(const Real& x, const PrecisionContext& ctx) {
  const long bits = ctx.working_bits();
  const Complex half = Complex::from_rational(BigRational(1, 2), bits);
  const Complex ix(Real::zero(bits), x.rounded(bits));
  const Complex one = Complex::from_int(1, bits);
  std::array<Complex, 6> values = {
      one / (half - ix), half + ix, (ix - half) / (ix + half), (ix + half) / (ix - half), half - ix, one / (half + ix),
  };
  const LambdaOrbit orbit = six_lambda_values(half + ix, ctx);
  const auto check = match_multiset({values.begin(), values.end()}, {orbit.values.begin(), orbit.values.end()},
                                    ctx.tolerance());
  if (!check.matched) {
    throw Error(ErrorKind::ConsistencyFailure, "the six closed-form values are not one lambda orbit");
  }
  for (auto& v : values) v = v.rounded(ctx.bits);
  return values;
}

OchiaiPair ochiai_pair(const Real& r, const Real& x, const Real& y, const PrecisionContext& ctx) {
  for (const auto* v : {&r, &x, &y}) {
    if (v->sign() < 0 || !v->is_finite()) {
      throw Error(ErrorKind::DomainRestriction, "Ochiai pair is restricted to nonnegative real r, x, y");
    }
  }
  const long bits = ctx.working_bits();
  const Real rr = r.rounded(bits);
  const Real xx = x.rounded(bits);
  const Real yy = y.rounded(bits);
  const Real x2y = xx * xx * yy;
  const Real xy2 = xx * yy * yy;
  OchiaiPair out;
  out.a = (rr + cbrt(x2y) + cbrt(xy2)).rounded(ctx.bits);
  const Real under = rr * rr + 2 * xx * yy + cbrt(pow(2 * rr + yy, 3) * x2y) + cbrt(pow(2 * rr + xx, 3) * xy2);
  out.c = sqrt(under).rounded(ctx.bits);
  return out;
}

OchiaiArgs ochiai_substitution(const AlgebraicExpr& j, const PrecisionContext& ctx) {
  using E = AlgebraicExpr;
  const Complex jv = eval_expr_working(j, ctx);
  require_nonpositive(jv.re() > ctx.tolerance() ? jv.re() : Real::zero(64), "ochiai_substitution");
  const E sqrt3 = E::sqrt(E::integer(3));
  const E s = E::integer(24) * sqrt3;
  OchiaiArgs out;
  out.r = E::sqrt(E::integer(1728) - j);
  if (jv.abs() <= ctx.tolerance()) {
    out.x = E::integer(48) * sqrt3;
    out.y = E::integer(0);
    return out;
  }
  const E beta_over_j = E::sqrt(E::add({E::integer(1728) * E::pow(j, 2), -E::pow(j, 3)})) * E::pow(j, -1);
  out.x = s - beta_over_j;
  out.y = -s - beta_over_j;
  return out;
}

}  // namespace ellambda
