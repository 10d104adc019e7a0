#pragma once

#include <array>
#include <utility>

#include "ellambda/expr.hpp"
#include "ellambda/precision.hpp"
#include "ellambda/quad_field.hpp"
#include "ellambda/transforms.hpp"

namespace ellambda {

/// x^3 + a x^2 + b x + c. The depressed-form quantities are derived on
/// demand.
struct MonicCubic {
  Complex a, b, c;

  Complex p() const;             // b - a^2/3
  Complex q() const;             // c - ab/3 + 2a^3/27
  Complex discriminant() const;  // -4p^3 - 27q^2
};

/// Roots of a monic cubic with the branch certificate u v = -p/3.
struct CubicRoots {
  std::array<Complex, 3> roots;
  Complex u;
  Complex v;
  /// True when D was numerically zero and the multiple-root formulas were used.
  bool degenerate = false;
};

/// roots_k = -a/3 + w^k u + w^-k v with w = exp(2 pi i / 3). u is the
/// principal cube root of the larger of -q/2 +- sqrt(-D/108); v = -p/(3u).
CubicRoots cardano_roots(const MonicCubic& cubic, const PrecisionContext& ctx);

/// 256 l^6 - 768 l^5 + (1536 - j) l^4 + (2j - 1792) l^3 + (1536 - j) l^2 - 768 l + 256,
/// highest degree first.
std::array<Complex, 7> sextic_coeffs(const Complex& j);
QuadPoly sextic_coeffs(const QuadFieldElem& j);
Complex sextic_eval(const Complex& j, const Complex& lam);

/// r = 3/2 +- sqrt(j - 1728)/16, the roots of 256 (r^2 - 3r + 9) = j.
std::pair<Complex, Complex> r_plus_minus(const Complex& j, const PrecisionContext& ctx);

/// l^3 - r l^2 + (r - 3) l + 1
Complex simplest_cubic_eval(const Complex& lam, const Complex& r);
/// Roots via Cardano; ConsistencyFailure if the root set is not closed under
/// l -> (l - 1)/l.
std::array<Complex, 3> simplest_cubic_roots(const Complex& r, const PrecisionContext& ctx);

/// All three roots of z^3 - (j/256) z + j/256.
std::array<Complex, 3> weber_cubic_roots(const Complex& j, const PrecisionContext& ctx);

struct WeberCubicRoot {
  Real z;
  /// The radical (A - B)/48 with A, B the cube roots of beta -+ 24 sqrt(3) j.
  Real printed_z;
  Real printed_residual;  // |z - printed_z|
  bool printed_matches = false;
};

/// Real root of the Weber cubic for j <= 0 (0 at j = 0), in [0, 1).
/// DomainRestriction for j > 0.
WeberCubicRoot weber_cubic_root(const Real& j, const PrecisionContext& ctx);

struct TschirnhausRoot {
  Real t;
  Real closed_form_t;
  Real residual;
};

/// Real root of 256 t^3 + j (2 - j/768) t - j (1 - j/384 + j^2/884736) for
/// j <= 0, cross-checked against the nested-radical t.
TschirnhausRoot tschirnhaus_root(const Real& j, const PrecisionContext& ctx);

/// Nested-radical trees built from a j expression.
struct ClosedFormExprs {
  AlgebraicExpr j;
  AlgebraicExpr beta;  // sqrt(1728 j^2 - j^3)
  AlgebraicExpr a;
  AlgebraicExpr b;
  AlgebraicExpr c;
  AlgebraicExpr t;
  AlgebraicExpr z_printed;
};

ClosedFormExprs closed_form_exprs(const AlgebraicExpr& j);

struct ClosedFormTriple {
  ClosedFormExprs exprs;
  Real a, b, c;
  /// max(|a - b|, |a - c|)
  Real max_deviation;
};

/// Evaluates a_d, b_d, c_d for j <= 0. DomainRestriction for j > 0;
/// NonRealResult when a value carries an imaginary part above 2^-(P-2G).
/// Does not throw on disagreement between the three; callers read
/// max_deviation.
ClosedFormTriple closed_forms(const AlgebraicExpr& j, const PrecisionContext& ctx);
/// The real j is converted exactly (every binary float is rational).
ClosedFormTriple closed_forms(const Real& j, const PrecisionContext& ctx);

/// lambda at the six arguments for a real x in {a_d, b_d, c_d}:
///   1/(1/2 - i x), 1/2 + i x, (i x - 1/2)/(i x + 1/2), (i x + 1/2)/(i x - 1/2),
///   1/2 - i x, 1/(1/2 + i x).
/// ConsistencyFailure when the set is not the orbit of 1/2 + i x.
std::array<Complex, 6> six_values_from_closed_form(const Real& x, const PrecisionContext& ctx);

struct OchiaiPair {
  Real a;  // r + (x^2 y)^(1/3) + (x y^2)^(1/3)
  Real c;  // sqrt(r^2 + 2xy + ((2r+y)^3 x^2 y)^(1/3) + ((2r+x)^3 x y^2)^(1/3))
};

/// Restricted to r, x, y >= 0, where both branch conditions hold with real
/// cube roots. DomainRestriction otherwise.
OchiaiPair ochiai_pair(const Real& r, const Real& x, const Real& y, const PrecisionContext& ctx);

struct OchiaiArgs {
  AlgebraicExpr r, x, y;
};

/// r = sqrt(1728 - j), x = 24 sqrt 3 - beta/j, y = -24 sqrt 3 - beta/j; at
/// j = 0 the limits x = 48 sqrt 3, y = 0 are used. Requires j <= 0.
OchiaiArgs ochiai_substitution(const AlgebraicExpr& j, const PrecisionContext& ctx);

}  // namespace ellambda
