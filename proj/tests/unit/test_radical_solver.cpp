#include <gtest/gtest.h>

#include <random>

#include "ellambda/error.hpp"
#include "ellambda/qseries.hpp"
#include "ellambda/radical_solver.hpp"
#include "ellambda/transforms.hpp"
#include "oracles.hpp"

using namespace ellambda;

namespace {

Complex ci(long v, long bits) { return Complex::from_int(v, bits); }

Complex cubic_at(const MonicCubic& m, const Complex& x) { return ((x + m.a) * x + m.b) * x + m.c; }

Real scale_of(const MonicCubic& m, const Complex& x) {
  const Real one = Real::from_int(1, 64);
  const Real ax = x.abs();
  return max(one, max(ax * ax * ax, max(m.a.abs() * ax * ax, max(m.b.abs() * ax, m.c.abs()))));
}

}  // namespace

TEST(Cardano, RandomIntegerCubics) {
  const PrecisionContext ctx(256);
  const long bits = ctx.working_bits();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coef(-50, 50);
  const Real tol = Real::pow2(-(ctx.bits - 64), 64);
  for (int n = 0; n < 100; ++n) {
    const MonicCubic m{ci(coef(rng), bits), ci(coef(rng), bits), ci(coef(rng), bits)};
    const CubicRoots r = cardano_roots(m, ctx);
    for (const auto& x : r.roots) {
      EXPECT_LE(cubic_at(m, x).abs(), tol * scale_of(m, x)) << n;
    }
    if (!r.degenerate) {
      const Complex cert = r.u * r.v + m.p() / 3;
      EXPECT_LE(cert.abs(), tol * max(Real::from_int(1, 64), m.p().abs())) << n;
    }
  }
}

TEST(Cardano, TripleRootAtZero) {
  const PrecisionContext ctx(128);
  const MonicCubic m{ci(0, 160), ci(0, 160), ci(0, 160)};
  const CubicRoots r = cardano_roots(m, ctx);
  EXPECT_TRUE(r.degenerate);
  for (const auto& x : r.roots) EXPECT_TRUE(x.is_zero());
}

TEST(Cardano, DoubleRoot) {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  const PrecisionContext ctx(128);
  const MonicCubic m{ci(0, 160), ci(-3, 160), ci(2, 160)};
  const CubicRoots r = cardano_roots(m, ctx);
  EXPECT_TRUE(r.degenerate);
  std::vector<Complex> got(r.roots.begin(), r.roots.end());
  EXPECT_TRUE(match_multiset(got, {ci(1, 128), ci(1, 128), ci(-2, 128)}, ctx.tolerance()).matched);
}

TEST(Cardano, ShiftedTripleRoot) {
  // (x + 5)^3
  const PrecisionContext ctx(128);
  const MonicCubic m{ci(15, 160), ci(75, 160), ci(125, 160)};
  const CubicRoots r = cardano_roots(m, ctx);
  EXPECT_TRUE(r.degenerate);
  for (const auto& x : r.roots) EXPECT_LE((x + 5).abs(), ctx.tolerance());
}

TEST(Sextic, LambdaIsARootAtItsJ) {
  const PrecisionContext ctx(256);
  const UpperHalfPoint t(Complex(Real::from_double(0.1, 300), Real::from_double(0.7, 300)));
  const Complex l = lambda_of_tau(t, ctx);
  const Complex j = j_of_tau(t, ctx);
  const Real scale = 256 * max(Real::from_int(1, 64), pow(l.abs(), 6)) * max(Real::from_int(1, 64), j.abs());
  EXPECT_LE(sextic_eval(j, l).abs(), ctx.tolerance() * scale);
}

TEST(Sextic, ExactCoefficientsAtJ7) {
  const QuadPoly p = sextic_coeffs(QuadFieldElem(BigRational(-3375)));
  const std::vector<long> want = {256, -768, 4911, -8542, 4911, -768, 256};
  ASSERT_EQ(p.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(p[k], QuadFieldElem(BigRational(want[k])));
}

TEST(SimplestCubic, ProductOfTwoCubicsIsTheSextic) {
  const PrecisionContext ctx(256);
  const long bits = ctx.working_bits();
  const Complex j(Real::from_double(-1234.5, bits), Real::from_double(77.0, bits));
  const auto [rp, rm] = r_plus_minus(j, ctx);
  const Complex x(Real::from_double(0.37, bits), Real::from_double(-1.2, bits));
  const Complex lhs = 256 * simplest_cubic_eval(x, rp) * simplest_cubic_eval(x, rm);
  EXPECT_LT(oracle::rel_err(lhs, sextic_eval(j, x)), ctx.tolerance());
  const auto roots = simplest_cubic_roots(rp, ctx);
  for (const auto& r : roots) EXPECT_LT(sextic_eval(j, r).abs(), ctx.tolerance() * 1e6);
}

TEST(WeberCubic, RootAtJ7IsFifteenSixteenths) {
  const PrecisionContext ctx(256);
  const WeberCubicRoot r = weber_cubic_root(Real::from_int(-3375, 300), ctx);
  EXPECT_LT(abs(r.z - Real::from_rational(BigRational(15, 16), 300)), ctx.tolerance());
  EXPECT_FALSE(r.printed_matches);
}

TEST(WeberCubic, RootMatchesBisection) {
  const PrecisionContext ctx(256);
  const long bits = 400;
  const Real j = Real::from_int(-32768, bits);
  const auto f = [&](const Real& z) { return z * z * z - j / 256 * z + j / 256; };
  const Real want = oracle::bisect(f, Real::zero(bits), Real::from_int(1, bits), bits);
  const WeberCubicRoot r = weber_cubic_root(j, ctx);
  EXPECT_LT(abs(r.z - want), ctx.tolerance());
  // The printed radical is sqrt 3 too small.
  EXPECT_GT(r.printed_residual, Real::from_double(0.41, 64));
  EXPECT_LT(abs(sqrt(Real::from_int(3, bits)) * r.printed_z - r.z), ctx.tolerance());
}

TEST(WeberCubic, RejectsPositiveJ) {
  try {
    weber_cubic_root(Real::from_int(1728, 128), PrecisionContext(128));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainRestriction);
  }
}

TEST(WeberCubic, ShiftedRootsAreWeberPowers) {
  const PrecisionContext ctx(256);
  const UpperHalfPoint t = UpperHalfPoint::half_plus_sqrt(Real::from_int(11, 300), 300);
  const WeberTriple w = weber_triple(t, ctx);
  std::vector<Complex> xs;
  for (const auto& z : weber_cubic_roots(j_of_tau(t, ctx), ctx)) xs.push_back(16 * (z - 1));
  EXPECT_TRUE(match_multiset(xs, {-pow(w.f, 24), pow(w.f1, 24), pow(w.f2, 24)}, ctx.tolerance()).matched);
}

TEST(Tschirnhaus, RootMatchesBisectionAndClosedForm) {
  const PrecisionContext ctx(256);
  const long bits = 400;
  const Real j = Real::from_int(-32768, bits);
  const auto f = [&](const Real& t) {
    return 256 * t * t * t + j * (2 - j / 768) * t - j * (1 - j / 384 + j * j / 884736);
  };
  const Real want = oracle::bisect(f, Real::from_int(-1000, bits), Real::from_int(1000, bits), bits);
  const TschirnhausRoot r = tschirnhaus_root(j, ctx);
  EXPECT_LT(abs(r.t - want), ctx.tolerance() * 100);
  EXPECT_LT(r.residual, ctx.tolerance() * 100);
}

TEST(ClosedForms, D11AgreesWithReference) {
  const PrecisionContext ctx(512);
  const ClosedFormTriple t = closed_forms(Real::from_int(-32768, 600), ctx);
  const Real want = Real::from_string("11.4335975761801640606364121118706041694539415680471283151547", 600);
  for (const Real* x : {&t.a, &t.b, &t.c}) EXPECT_LT(abs(*x - want), Real::from_string("1e-57", 64));
  EXPECT_LT(t.max_deviation, Real::from_string("1e-80", 64));
}

TEST(ClosedForms, SmallCases) {
  const PrecisionContext ctx(256);
  const ClosedFormTriple t3 = closed_forms(Real::zero(300), ctx);
  EXPECT_LT(abs(t3.a - sqrt(Real::from_int(3, 300)) / 2), ctx.tolerance());
  const ClosedFormTriple t7 = closed_forms(Real::from_int(-3375, 300), ctx);
  EXPECT_LT(abs(t7.a - 3 * sqrt(Real::from_int(7, 300)) / 2), ctx.tolerance() * 8);
  EXPECT_THROW(closed_forms(Real::from_int(5, 300), ctx), Error);
}

TEST(ClosedForms, SixValuesMatchQSeries) {
  const PrecisionContext ctx(256);
  const long wb = ctx.working_bits();
  const ClosedFormTriple t = closed_forms(Real::from_int(-884736, wb), ctx);  // d = 19
  const auto six = six_values_from_closed_form(t.a, ctx);
  const Real d = Real::from_int(19, wb);
  EXPECT_LT(oracle::rel_err(six[0], lambda_of_tau(UpperHalfPoint::half_plus_sqrt(d, wb), ctx)), ctx.tolerance());
  EXPECT_LT(oracle::rel_err(six[1], lambda_of_tau(UpperHalfPoint::cayley_sqrt(d, wb), ctx)), ctx.tolerance());
  const UpperHalfPoint t6(Complex(Real::from_double(-0.5, wb), sqrt(d) / 2));
  EXPECT_LT(oracle::rel_err(six[5], lambda_of_tau(t6, ctx)), ctx.tolerance());
}

TEST(Ochiai, RandomPositiveTriples) {
  const PrecisionContext ctx(256);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int n = 0; n < 100; ++n) {
    const long wb = ctx.working_bits();
    const OchiaiPair p = ochiai_pair(Real::from_double(u(rng), wb), Real::from_double(u(rng), wb),
                                     Real::from_double(u(rng), wb), ctx);
    EXPECT_LE(abs(p.a - p.c), ctx.tolerance() * p.a) << n;
  }
  EXPECT_THROW(ochiai_pair(Real::from_int(1, 64), Real::from_int(-1, 64), Real::from_int(1, 64), ctx), Error);
}

TEST(Ochiai, SubstitutionReproducesClosedForm) {
  const PrecisionContext ctx(256);
  const AlgebraicExpr j = AlgebraicExpr::integer(-32768);
  const OchiaiArgs args = ochiai_substitution(j, ctx);
  const auto value = [&](const AlgebraicExpr& e) { return eval_expr(e, ctx).re(); };
  const OchiaiPair p = ochiai_pair(value(args.r), value(args.x), value(args.y), ctx);
  const Real a = closed_forms(j, ctx).a;
  EXPECT_LT(abs(p.a - 48 * a), ctx.tolerance() * p.a);
  EXPECT_LT(abs(p.a - p.c), ctx.tolerance() * p.a);
  // j = 0 uses the limit x = 48 sqrt 3, y = 0.
  const OchiaiArgs zero = ochiai_substitution(AlgebraicExpr::integer(0), ctx);
  EXPECT_TRUE(eval_expr(zero.y, ctx).is_zero());
}
