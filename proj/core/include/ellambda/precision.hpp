#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "ellambda/rational.hpp"

namespace ellambda {

class Real;

/// Working precision for one evaluation. `bits` is the precision of returned
/// values; internal kernels run at `bits + guard_bits`. Escalating checks may
/// go up to `max_escalation_bits`.
struct PrecisionContext {
  long bits = 256;
  long guard_bits = 32;
  long max_escalation_bits = 1024;

  PrecisionContext() = default;
  /// `max_escalation` of zero means 4 * bits.
  explicit PrecisionContext(long bits, long guard = 32, long max_escalation = 0);

  long working_bits() const { return bits + guard_bits; }

  /// Same guard, escalation ceiling scaled along with the precision.
  PrecisionContext with_bits(long new_bits) const;

  /// 2^-(P - 2G): the default acceptance threshold for numeric agreement.
  Real tolerance() const;

  void validate() const;
};

/// Arbitrary-precision binary floating value (RAII over mpfr_t). Each value
/// carries its own precision; binary operations produce a result at the
/// larger of the two operand precisions.
class Real {
 public:
  Real() : Real(zero(64)) {}
  ~Real();
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;

  static Real zero(long bits);
  static Real from_int(long value, long bits);
  static Real from_double(double value, long bits);
  static Real from_rational(const BigRational& value, long bits);
  static Real from_mpz(const mpz_class& value, long bits);
  /// Decimal or scientific notation, e.g. "68.6015" or "-1.5e-20".
  static Real from_string(std::string_view text, long bits);
  static Real pi(long bits);
  /// 2^exponent, exact.
  static Real pow2(long exponent, long bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Copy rounded to nearest at a new precision.
  Real rounded(long bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact conversion: every finite binary float is a dyadic rational.
  BigRational to_rational() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_scientific(int digits) const;
  /// Positional notation with `digits` significant digits (falls back to
  /// scientific for very large or small magnitudes).
  std::string to_decimal(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; LONG_MIN for zero.
  long exponent() const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator-(long a, const Real& b) { return -b + a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);

 private:
  explicit Real(long bits, int /*tag*/);
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
/// Real cube root, sign preserving.
Real cbrt(const Real& x);
/// Real n-th root; x must be non-negative for even n.
Real root(const Real& x, unsigned long n);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// Complex value built from two Reals. All arithmetic is authored here on
/// top of the real kernels; there is no dependency on a complex MPFR layer.
class Complex {
 public:
  Complex() = default;
  explicit Complex(Real re) : re_(std::move(re)), im_(Real::zero(re_.precision())) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex zero(long bits) { return Complex(Real::zero(bits), Real::zero(bits)); }
  static Complex from_int(long value, long bits) { return Complex(Real::from_int(value, bits)); }
  static Complex from_rational(const BigRational& value, long bits) {
    return Complex(Real::from_rational(value, bits));
  }
  static Complex i(long bits) { return Complex(Real::zero(bits), Real::from_int(1, bits)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  long precision() const;
  Complex rounded(long bits) const { return Complex(re_.rounded(bits), im_.rounded(bits)); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex conj() const { return Complex(re_, -im_); }
  Real norm() const;  // |z|^2
  Real abs() const;
  Real arg() const;
  Complex mul_i() const { return Complex(-im_, re_); }

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator+(Complex a, long b);
  friend Complex operator-(Complex a, long b);
  friend Complex operator+(long b, Complex a);
  friend Complex operator-(long b, const Complex& a);
  friend Complex operator*(Complex a, long b);
  friend Complex operator*(long b, Complex a);
  friend Complex operator/(Complex a, long b);
  friend Complex operator/(long b, const Complex& a);

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// "re + im i" in scientific notation.
  std::string to_string(int digits) const;

 private:
  Real re_;
  Real im_;
};

Complex exp(const Complex& z);
/// Principal logarithm, imaginary part in (-pi, pi].
Complex log(const Complex& z);
/// Principal square root: non-negative real part; negative reals map to a
/// positive multiple of i.
Complex sqrt(const Complex& z);
/// Principal cube root: argument in (-pi/3, pi/3].
Complex cbrt(const Complex& z);
Complex pow(const Complex& z, long n);
Real abs(const Complex& z);

/// Throws Overflow if either component is NaN or infinite.
const Complex& ensure_finite(const Complex& z, std::string_view where);
const Real& ensure_finite(const Real& x, std::string_view where);

/// |a - b| / max(1, |b|)
Real relative_residual(const Complex& a, const Complex& b);

}  // namespace ellambda
