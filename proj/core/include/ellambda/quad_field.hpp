#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ellambda/precision.hpp"
#include "ellambda/rational.hpp"

namespace ellambda {

/// Exact element a + b*sqrt(m) of Q(sqrt m). `m == 1` marks a plain rational
/// (b is then zero); such elements combine with any field.
class QuadFieldElem {
 public:
  QuadFieldElem() = default;
  QuadFieldElem(BigRational a)  // NOLINT(google-explicit-constructor)
      : a_(std::move(a)) {}
  QuadFieldElem(BigRational a, BigRational b, long m);

  static QuadFieldElem sqrt_of(long m) { return QuadFieldElem(0, 1, m); }

  /// Parses "a", "a+br", "a-br", "br" with rational a, b and r = sqrt(m),
  /// e.g. "-36+16r" or "140+99r".
  static QuadFieldElem parse(std::string_view text, long m);

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  long m() const { return m_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadFieldElem conj() const { return QuadFieldElem(a_, -b_, m_); }
  /// a^2 - m b^2
  BigRational field_norm() const;
  QuadFieldElem inverse() const;
  QuadFieldElem pow(long exponent) const;

  QuadFieldElem operator-() const { return QuadFieldElem(-a_, -b_, m_); }
  QuadFieldElem& operator+=(const QuadFieldElem& o);
  QuadFieldElem& operator-=(const QuadFieldElem& o);
  QuadFieldElem& operator*=(const QuadFieldElem& o);

  friend QuadFieldElem operator+(QuadFieldElem x, const QuadFieldElem& y) { return x += y; }
  friend QuadFieldElem operator-(QuadFieldElem x, const QuadFieldElem& y) { return x -= y; }
  friend QuadFieldElem operator*(QuadFieldElem x, const QuadFieldElem& y) { return x *= y; }
  friend bool operator==(const QuadFieldElem& x, const QuadFieldElem& y);

  Complex to_complex(long bits) const;
  std::string to_string() const;

 private:
  long joint_field(const QuadFieldElem& o) const;

  BigRational a_;
  BigRational b_;
  long m_ = 1;
};

bool is_squarefree(long m);

/// Coefficients in descending degree order.
using QuadPoly = std::vector<QuadFieldElem>;
/// c2*x^2 + c1*x + c0, stored {c2, c1, c0}.
using QuadraticFactor = std::array<QuadFieldElem, 3>;

QuadPoly poly_mul(const QuadPoly& lhs, const QuadPoly& rhs);

/// Exact product scalar * f1 * f2 * f3 of three quadratics: the degree-6
/// coefficient list, highest degree first. Throws MixedField when the inputs
/// live in different quadratic fields.
QuadPoly quad_poly_expand(const std::array<QuadraticFactor, 3>& factors, const QuadFieldElem& scalar);

}  // namespace ellambda
