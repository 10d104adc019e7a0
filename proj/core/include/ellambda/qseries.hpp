#pragma once

#include <array>

#include "ellambda/precision.hpp"
#include "ellambda/rational.hpp"

namespace ellambda {

/// A point tau with positive imaginary part.
class UpperHalfPoint {
 public:
  explicit UpperHalfPoint(Complex tau);

  /// (1 + sqrt(-d)) / 2
  static UpperHalfPoint half_plus_sqrt(const Real& d, long bits);
  /// (sqrt(-d) - 1) / (sqrt(-d) + 1) = ((d - 1) + 2 sqrt(d) i) / (d + 1)
  static UpperHalfPoint cayley_sqrt(const Real& d, long bits);
  /// sqrt(-d)
  static UpperHalfPoint sqrt_minus(const Real& d, long bits);

  const Complex& tau() const { return tau_; }

 private:
  Complex tau_;
};

/// Fractional powers of the nome q = exp(2 pi i tau), each computed directly
/// as exp(2 pi i tau alpha).
class NomeBundle {
 public:
  NomeBundle(const UpperHalfPoint& tau, long bits);

  Complex q_pow(const BigRational& alpha) const;
  const Complex& q() const { return q_; }
  /// |q| = exp(-2 pi im tau)
  const Real& q_abs() const { return q_abs_; }

 private:
  Complex two_pi_i_tau_;
  Complex q_;
  Real q_abs_;
};

struct SeriesTruncation {
  long terms = 0;
  Real tail_bound;
};

/// Constant in the tail bound C |q|^(N/2) / (1 - |q|) shared by every product.
inline constexpr long kTailConstant = 64;

/// Smallest N with 64 |q|^(N/2) / (1 - |q|) <= 2^-(P+G). SlowConvergence when
/// the implied im(tau) is below 0.05.
SeriesTruncation truncation_terms(const Real& q_abs, const PrecisionContext& ctx);

/// Optional explicit term count for the product evaluators (0 = automatic).
struct SeriesOptions {
  long terms = 0;
};

/// 16 q^(1/2) prod ((1 + q^n) / (1 + q^(n-1/2)))^8
Complex lambda_of_tau(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});
/// 4 q^(1/4) prod ((1 + q^n) / (1 + q^(n-1/2)))^4
Complex modulus_k(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});
/// 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2); DegenerateLambda
/// when lambda is within 2^-(P/2) of 0 or 1.
Complex j_of_tau(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});
Complex j_from_lambda(const Complex& lambda, const PrecisionContext& ctx);
/// 1/q + 744 + 196884 q + 21493760 q^2. Error is O(|q|^3) with constant
/// about 1e9 (the next coefficient is 864299970). Requires |q| <= exp(-2 pi).
Complex j_qexpansion_check(const UpperHalfPoint& tau, const PrecisionContext& ctx);
/// q^(1/24) prod (1 - q^n)
Complex eta(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});

struct WeberTriple {
  Complex f;   // q^(-1/48) prod (1 + q^(n-1/2))
  Complex f1;  // q^(-1/48) prod (1 - q^(n-1/2))
  Complex f2;  // sqrt(2) q^(1/24) prod (1 + q^n)
};
WeberTriple weber_triple(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});

/// lambda'/lambda = pi i prod (1 - q^n)^4 (1 - q^(n-1/2))^8
Complex lambda_log_derivative(const UpperHalfPoint& tau, const PrecisionContext& ctx, SeriesOptions opt = {});

}  // namespace ellambda
