#include <gtest/gtest.h>

#include "ellambda/error.hpp"
#include "ellambda/precision.hpp"

using namespace ellambda;

TEST(PrecisionContext, ToleranceIsTwoToMinusPMinusTwoGuards) {
  const PrecisionContext ctx(256);
  EXPECT_EQ(ctx.working_bits(), 288);
  EXPECT_EQ(ctx.tolerance(), Real::pow2(-192, 64));
  EXPECT_EQ(ctx.max_escalation_bits, 1024);
}

TEST(PrecisionContext, RejectsTinyPrecision) {
  EXPECT_THROW(PrecisionContext(32), Error);
  try {
    PrecisionContext bad(16);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(PrecisionContext, WithBitsScalesEscalationCeiling) {
  const PrecisionContext ctx(128);
  const PrecisionContext wide = ctx.with_bits(256);
  EXPECT_EQ(wide.bits, 256);
  EXPECT_EQ(wide.guard_bits, ctx.guard_bits);
  EXPECT_EQ(wide.max_escalation_bits, 1024);
}

TEST(Real, ArithmeticAndPrecisionPropagation) {
  const Real a = Real::from_int(3, 64);
  const Real b = Real::from_int(1, 200) / 7;
  const Real c = a + b;
  EXPECT_EQ(c.precision(), 200);
  EXPECT_EQ((c - b), a);
  EXPECT_EQ(Real::from_rational(BigRational(22, 7), 300), a + Real::from_int(1, 300) / 7);
}

TEST(Real, FromStringRejectsTrailingGarbage) {
  EXPECT_EQ(Real::from_string("1.5e-3", 64), Real::from_rational(BigRational(3, 2000), 64));
  EXPECT_THROW(Real::from_string("1.5x", 64), Error);
  EXPECT_THROW(Real::from_string("", 64), Error);
}

TEST(Real, CubeRootPreservesSign) {
  EXPECT_EQ(cbrt(Real::from_int(-27, 128)), Real::from_int(-3, 128));
  EXPECT_EQ(root(Real::from_int(64, 128), 6), Real::from_int(2, 128));
}

TEST(Real, RationalRoundTripIsExact) {
  const Real x = Real::pi(300);
  EXPECT_EQ(Real::from_rational(x.to_rational(), 300), x);
}

TEST(Complex, PrincipalSquareRootBranch) {
  const long bits = 128;
  const Complex m4 = Complex::from_int(-4, bits);
  const Complex r = sqrt(m4);
  EXPECT_TRUE(r.re().is_zero());
  EXPECT_EQ(r.im(), Real::from_int(2, bits));
  // Just below the cut: the root has a negative imaginary part.
  const Complex below(Real::from_int(-4, bits), -Real::pow2(-100, bits));
  EXPECT_LT(sqrt(below).im().sign(), 0);
  EXPECT_GT(sqrt(below).re().sign(), 0);
}

TEST(Complex, PrincipalCubeRootArgumentRange) {
  const long bits = 128;
  const Complex r = cbrt(Complex::from_int(-8, bits));
  // arg(-8) = pi, so the principal cube root is 2 exp(i pi/3) = 1 + i sqrt 3.
  EXPECT_LT(relative_residual(r, Complex(Real::from_int(1, bits), sqrt(Real::from_int(3, bits)))),
            Real::pow2(-120, bits));
  const Real pi = Real::pi(bits);
  for (int k = 0; k < 12; ++k) {
    const Real theta = pi * (2 * k - 11) / 12;
    const Complex z(cos(theta) * 5, sin(theta) * 5);
    const Complex c = cbrt(z);
    EXPECT_GT(c.arg(), -pi / 3);
    EXPECT_LE(c.arg(), pi / 3 + Real::pow2(-100, bits));
    EXPECT_LT(relative_residual(pow(c, 3), z), Real::pow2(-110, bits));
  }
}

TEST(Complex, ExpLogRoundTrip) {
  const long bits = 256;
  const Complex z(Real::from_double(0.3, bits), Real::from_double(-2.1, bits));
  EXPECT_LT(relative_residual(log(exp(z)), z), Real::pow2(-240, bits));
}

TEST(Complex, DivisionAndMulI) {
  const long bits = 128;
  const Complex a(Real::from_int(3, bits), Real::from_int(4, bits));
  EXPECT_EQ(a.abs(), Real::from_int(5, bits));
  EXPECT_LT(relative_residual(a / a, Complex::from_int(1, bits)), Real::pow2(-120, bits));
  EXPECT_EQ(a.mul_i(), Complex(Real::from_int(-4, bits), Real::from_int(3, bits)));
}

TEST(Complex, EnsureFiniteThrowsOverflow) {
  const Complex bad(Real::from_double(1.0 / 0.0, 64), Real::zero(64));
  try {
    ensure_finite(bad, "test");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
}

TEST(Real, Formatting) {
  EXPECT_EQ(Real::from_double(-1.5e-20, 64).to_scientific(3), "-1.50e-20");
  EXPECT_EQ(Real::from_int(68, 64).to_decimal(4), "68.00");
}
