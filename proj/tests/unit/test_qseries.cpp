#include <gtest/gtest.h>

#include <random>

#include "ellambda/error.hpp"
#include "ellambda/qseries.hpp"
#include "oracles.hpp"

using namespace ellambda;

namespace {

Complex tau_of(double re, double im, long bits) { return Complex(Real::from_double(re, bits), Real::from_double(im, bits)); }

Real from(const char* s, long bits = 512) { return Real::from_string(s, bits); }

}  // namespace

TEST(QSeries, UpperHalfPointRejectsRealAxis) {
  try {
    UpperHalfPoint(tau_of(0.3, 0.0, 64));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  EXPECT_THROW(UpperHalfPoint(tau_of(0.3, -1.0, 64)), Error);
}

TEST(QSeries, LambdaAtIIsOneHalf) {
  const PrecisionContext ctx(256);
  const Complex l = lambda_of_tau(UpperHalfPoint(tau_of(0, 1, 300)), ctx);
  EXPECT_LT((l - Complex(Real::from_double(0.5, 256))).abs(), from("1e-70"));
}

TEST(QSeries, LambdaAtISqrt2IsThreeMinusTwoSqrt2) {
  const PrecisionContext ctx(300);
  const Complex l = lambda_of_tau(UpperHalfPoint::sqrt_minus(Real::from_int(2, 400), 400), ctx);
  const Real expected = 3 - 2 * sqrt(Real::from_int(2, 400));
  EXPECT_LT(oracle::rel_err(l, Complex(expected)), ctx.tolerance());
}

TEST(QSeries, LambdaMatchesThetaQuotientAtRandomTau) {
  const PrecisionContext ctx(256);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 5.0);
  for (int k = 0; k < 20; ++k) {
    const Complex t = tau_of(re(rng), im(rng), ctx.working_bits());
    const Complex got = lambda_of_tau(UpperHalfPoint(t), ctx);
    const Complex want = oracle::theta_lambda(t, ctx.working_bits() + 32);
    EXPECT_LT(oracle::rel_err(got, want), ctx.tolerance()) << t.to_string(10);
  }
}

TEST(QSeries, MpmathReferenceValue) {
  // theta-constant quotient at tau = 0.3 + 0.7i, 120 digits.
  const PrecisionContext ctx(384);
  const Complex got = lambda_of_tau(UpperHalfPoint(Complex(from("0.3", 400), from("0.7", 400))), ctx);
  const Complex want(from("0.954260328197096131281180042679142542010298615583338152251493"),
                     from("0.359392047194660841198263475175312215059737211695183555565323"));
  EXPECT_LT(oracle::rel_err(got, want), from("1e-58"));
}

TEST(QSeries, SquareOfModulusIsLambda) {
  const PrecisionContext ctx(256);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.3, 5.0);
  for (int k = 0; k < 50; ++k) {
    const UpperHalfPoint t(tau_of(re(rng), im(rng), ctx.working_bits()));
    const Complex kk = modulus_k(t, ctx);
    EXPECT_LT(oracle::rel_err(kk * kk, lambda_of_tau(t, ctx)), Real::pow2(-(ctx.bits - ctx.guard_bits), 64));
  }
}

TEST(QSeries, JAtWeberPointsIsInteger) {
  const PrecisionContext ctx(512);
  const Complex j7 = j_of_tau(UpperHalfPoint::half_plus_sqrt(Real::from_int(7, 600), 600), ctx);
  EXPECT_LT((j7 - Complex::from_int(-3375, 512)).abs(), from("1e-100"));
  const Complex j163 = j_of_tau(UpperHalfPoint::half_plus_sqrt(Real::from_int(163, 600), 600), ctx);
  const Real expected = -pow(Real::from_int(640320, 512), 3);
  EXPECT_LT((j163 - Complex(expected)).abs(), from("1e-60"));
}

TEST(QSeries, JMatchesQExpansionForLargeImaginaryPart) {
  const PrecisionContext ctx(256);
  for (double im : {2.0, 3.0, 4.5}) {
    const UpperHalfPoint t(tau_of(0.17, im, ctx.working_bits()));
    const Complex direct = j_of_tau(t, ctx);
    const Complex series = j_qexpansion_check(t, ctx);
    // Truncation error of the expansion: about 9e8 |q|^3.
    const Real bound = 1e9 * exp(Real::from_double(-6.0 * 3.14159265358979 * im, 64)) * 1.01;
    EXPECT_LT((direct - series).abs(), bound) << im;
  }
  EXPECT_THROW(j_qexpansion_check(UpperHalfPoint(tau_of(0, 0.9, 64)), ctx), Error);
}

TEST(QSeries, JInvariantUnderModularGenerators) {
  const PrecisionContext ctx(256);
  const Complex t = tau_of(0.21, 0.83, ctx.working_bits());
  const Complex j = j_of_tau(UpperHalfPoint(t), ctx);
  const Complex shifted(t.re() + 1, t.im());
  const Complex inverted = Complex::from_int(-1, ctx.working_bits()) / t;
  const Real tol = Real::pow2(-(ctx.bits - 64), 64);
  EXPECT_LT(oracle::rel_err(j_of_tau(UpperHalfPoint(shifted), ctx), j), tol);
  EXPECT_LT(oracle::rel_err(j_of_tau(UpperHalfPoint(inverted), ctx), j), tol);
}

TEST(QSeries, LambdaTransformLaws) {
  const PrecisionContext ctx(256);
  const Complex t = tau_of(-0.35, 1.4, ctx.working_bits());
  const Complex l = lambda_of_tau(UpperHalfPoint(t), ctx);
  const Complex l_shift = lambda_of_tau(UpperHalfPoint(Complex(t.re() + 1, t.im())), ctx);
  const Complex l_inv = lambda_of_tau(UpperHalfPoint(Complex::from_int(-1, ctx.working_bits()) / t), ctx);
  const Real tol = ctx.tolerance();
  EXPECT_LT(oracle::rel_err(l_shift * (l - 1), l), tol);
  EXPECT_LT(oracle::rel_err(l_inv, 1 - l), tol);
}

TEST(QSeries, EtaMatchesPentagonalSeries) {
  const PrecisionContext ctx(256);
  for (auto [re, im] : {std::pair{-0.2, 1.1}, std::pair{0.4, 0.35}, std::pair{0.0, 3.0}}) {
    const Complex t = tau_of(re, im, ctx.working_bits());
    EXPECT_LT(oracle::rel_err(eta(UpperHalfPoint(t), ctx), oracle::pentagonal_eta(t, ctx.working_bits() + 32)),
              ctx.tolerance());
  }
  const Complex got = eta(UpperHalfPoint(Complex(from("-0.2", 300), from("1.1", 300))), PrecisionContext(300));
  const Complex want(from("0.748556842688148902631310513057824462109919309925248355228851"),
                     from("-0.0385183764748063233256792291077512324558268477500491409332449"));
  EXPECT_LT(oracle::rel_err(got, want), from("1e-58"));
}

TEST(QSeries, WeberFunctionEquations) {
  const PrecisionContext ctx(256);
  const long wb = ctx.working_bits();
  const Complex t = tau_of(0.12, 0.9, wb);
  const WeberTriple w = weber_triple(UpperHalfPoint(t), ctx);
  const Real sqrt2 = sqrt(Real::from_int(2, wb));
  const Real tol = ctx.tolerance();
  EXPECT_LT(oracle::rel_err(w.f * w.f1 * w.f2, Complex(sqrt2)), tol);
  EXPECT_LT(oracle::rel_err(pow(w.f1, 8) + pow(w.f2, 8), pow(w.f, 8)), tol);
  const Complex l = lambda_of_tau(UpperHalfPoint(t), ctx);
  EXPECT_LT(oracle::rel_err(pow(w.f2, 8) / pow(w.f, 8), l), tol);
  EXPECT_LT(oracle::rel_err(pow(w.f1, 8) / pow(w.f, 8), 1 - l), tol);
  const Complex eta_ratio = sqrt2 * eta(UpperHalfPoint(2 * t), ctx) / eta(UpperHalfPoint(t), ctx);
  EXPECT_LT(oracle::rel_err(w.f2, eta_ratio), tol);
}

TEST(QSeries, WeberProductAtTwoI) {
  const PrecisionContext ctx(256);
  const WeberTriple w = weber_triple(UpperHalfPoint(tau_of(0, 2, 300)), ctx);
  EXPECT_LT(oracle::rel_err(w.f * w.f1 * w.f2, Complex(sqrt(Real::from_int(2, 300)))), ctx.tolerance());
}

TEST(QSeries, LogDerivativeMatchesFiniteDifference) {
  const PrecisionContext ctx(512);
  const long wb = ctx.working_bits();
  const Complex t = tau_of(0, 2, wb);
  const Complex h(from("1e-15", wb));
  const Complex fd = log(lambda_of_tau(UpperHalfPoint(t + h), ctx) / lambda_of_tau(UpperHalfPoint(t - h), ctx)) /
                     (2 * h);
  const Complex got = lambda_log_derivative(UpperHalfPoint(t), ctx);
  EXPECT_LT(oracle::rel_err(got, fd), from("1e-10"));
  // On the imaginary axis the value is i times a positive real.
  EXPECT_LT(abs(got.re()), ctx.tolerance());
  EXPECT_GT(got.im().sign(), 0);
}

TEST(QSeries, LogDerivativeTendsToPiI) {
  const PrecisionContext ctx(128);
  const Complex got = lambda_log_derivative(UpperHalfPoint(tau_of(0, 20, 200)), ctx);
  const Complex pi_i(Real::zero(128), Real::pi(128));
  EXPECT_LT(oracle::rel_err(got, pi_i), from("1e-25", 128));
}

TEST(QSeries, TruncationIsSmallestSatisfyingCount) {
  const PrecisionContext ctx(128);
  const long bits = 256;
  const Real q = exp(-2 * Real::pi(bits));
  const SeriesTruncation tr = truncation_terms(q, ctx);
  EXPECT_EQ(tr.terms, 37);
  // Brute force: scan N upward with the same bound.
  const Real target = Real::pow2(-(ctx.bits + ctx.guard_bits), bits);
  const auto bound = [&](long n) { return 64 * exp(log(q) * n / 2) / (1 - q); };
  long n = 1;
  while (bound(n) > target) ++n;
  EXPECT_EQ(tr.terms, n);
  EXPECT_LE(tr.tail_bound, target);
}

TEST(QSeries, SlowConvergenceBelowFloor) {
  const PrecisionContext ctx(128);
  try {
    lambda_of_tau(UpperHalfPoint(tau_of(0.1, 0.04, 128)), ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SlowConvergence);
  }
}

TEST(QSeries, DoublingTruncationIsStable) {
  const PrecisionContext ctx(200);
  const UpperHalfPoint t(tau_of(0.3, 0.6, ctx.working_bits()));
  const NomeBundle nome(t, ctx.working_bits());
  const SeriesTruncation tr = truncation_terms(nome.q_abs(), ctx);
  const auto check = [&](auto fn) {
    const Complex a = fn(SeriesOptions{tr.terms});
    const Complex b = fn(SeriesOptions{2 * tr.terms});
    EXPECT_LE((a - b).abs(), 2 * tr.tail_bound * max(a.abs(), Real::from_int(1, 64)) + Real::pow2(-ctx.bits + 4, 64));
  };
  check([&](SeriesOptions o) { return lambda_of_tau(t, ctx, o); });
  check([&](SeriesOptions o) { return modulus_k(t, ctx, o); });
  check([&](SeriesOptions o) { return eta(t, ctx, o); });
  check([&](SeriesOptions o) { return weber_triple(t, ctx, o).f; });
  check([&](SeriesOptions o) { return lambda_log_derivative(t, ctx, o); });
}

TEST(QSeries, JFromLambdaRejectsCusps) {
  const PrecisionContext ctx(128);
  try {
    j_from_lambda(Complex::from_int(1, 128), ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateLambda);
  }
  EXPECT_THROW(j_from_lambda(Complex::zero(128), ctx), Error);
}
