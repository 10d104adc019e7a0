#include "ellambda/precision.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <memory>
#include <utility>

#include "ellambda/error.hpp"

namespace ellambda {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RealRootOfNonReal: return "RealRootOfNonReal";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::EscalationExhausted: return "EscalationExhausted";
    case ErrorKind::MixedField: return "MixedField";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::DegenerateLambda: return "DegenerateLambda";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::DomainRestriction: return "DomainRestriction";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateRecord: return "DuplicateRecord";
    case ErrorKind::UnknownD: return "UnknownD";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// PrecisionContext

PrecisionContext::PrecisionContext(long p, long guard, long max_escalation)
    : bits(p), guard_bits(guard), max_escalation_bits(max_escalation == 0 ? 4 * p : max_escalation) {
  validate();
}

PrecisionContext PrecisionContext::with_bits(long new_bits) const {
  const long ratio_scaled = max_escalation_bits * new_bits / bits;
  return PrecisionContext(new_bits, guard_bits, std::max(ratio_scaled, 2 * new_bits));
}

Real PrecisionContext::tolerance() const { return Real::pow2(-(bits - 2 * guard_bits), working_bits()); }

void PrecisionContext::validate() const {
  if (bits < 64) throw Error(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
  if (guard_bits < 16) throw Error(ErrorKind::InvalidArgument, "guard bits must be at least 16");
  if (max_escalation_bits < 2 * bits) {
    throw Error(ErrorKind::InvalidArgument, "max_escalation_bits must be at least twice the precision");
  }
}

// ---------------------------------------------------------------------------
// Real

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Grows `target` to `bits` while keeping its value.
void widen(Real& target, long bits) {
  if (target.precision() < bits) mpfr_prec_round(target.get(), bits, kRnd);
}

struct MpfrString {
  char* ptr = nullptr;
  ~MpfrString() {
    if (ptr != nullptr) mpfr_free_str(ptr);
  }
};

}  // namespace

Real::Real(long bits, int) { mpfr_init2(value_, static_cast<mpfr_prec_t>(bits)); }

Real::~Real() { mpfr_clear(value_); }

Real::Real(const Real& other) : Real(other.precision(), 0) { mpfr_set(value_, other.value_, kRnd); }

Real::Real(Real&& other) noexcept : Real(MPFR_PREC_MIN, 0) { mpfr_swap(value_, other.value_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real Real::zero(long bits) {
  Real r(bits, 0);
  mpfr_set_zero(r.value_, 1);
  return r;
}

Real Real::from_int(long value, long bits) {
  Real r(bits, 0);
  mpfr_set_si(r.value_, value, kRnd);
  return r;
}

Real Real::from_double(double value, long bits) {
  Real r(bits, 0);
  mpfr_set_d(r.value_, value, kRnd);
  return r;
}

Real Real::from_rational(const BigRational& value, long bits) {
  Real r(bits, 0);
  mpfr_set_q(r.value_, value.get().get_mpq_t(), kRnd);
  return r;
}

Real Real::from_mpz(const mpz_class& value, long bits) {
  Real r(bits, 0);
  mpfr_set_z(r.value_, value.get_mpz_t(), kRnd);
  return r;
}

Real Real::from_string(std::string_view text, long bits) {
  Real r(bits, 0);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::InvalidArgument, "malformed number \"" + s + "\"");
  }
  return r;
}

Real Real::pi(long bits) {
  Real r(bits, 0);
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

Real Real::pow2(long exponent, long bits) {
  Real r(bits, 0);
  mpfr_set_ui_2exp(r.value_, 1, exponent, kRnd);
  return r;
}

Real Real::rounded(long bits) const {
  Real r(bits, 0);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

BigRational Real::to_rational() const {
  if (!is_finite()) throw Error(ErrorKind::Overflow, "non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return BigRational(q);
}

std::string Real::to_scientific(int digits) const {
  MpfrString s;
  mpfr_asprintf(&s.ptr, "%.*Re", std::max(digits - 1, 0), value_);
  return s.ptr;
}

std::string Real::to_decimal(int digits) const {
  MpfrString s;
  mpfr_asprintf(&s.ptr, "%#.*Rg", std::max(digits, 1), value_);
  return s.ptr;
}

long Real::exponent() const {
  if (is_zero()) return LONG_MIN;
  return static_cast<long>(mpfr_get_exp(value_));
}

Real Real::operator-() const {
  Real r(precision(), 0);
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

Real& Real::operator+=(const Real& o) {
  widen(*this, o.precision());
  mpfr_add(value_, value_, o.value_, kRnd);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o.precision());
  mpfr_sub(value_, value_, o.value_, kRnd);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o.precision());
  mpfr_mul(value_, value_, o.value_, kRnd);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o.precision());
  mpfr_div(value_, value_, o.value_, kRnd);
  return *this;
}

Real& Real::operator+=(long o) {
  mpfr_add_si(value_, value_, o, kRnd);
  return *this;
}

Real& Real::operator-=(long o) {
  mpfr_sub_si(value_, value_, o, kRnd);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, kRnd);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(value_, value_, o, kRnd);
  return *this;
}

Real operator/(long a, const Real& b) {
  Real r = Real::zero(b.precision());
  mpfr_si_div(r.get(), a, b.get(), kRnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define ELLAMBDA_UNARY(name, fn)            \
  Real name(const Real& x) {                \
    Real r = Real::zero(x.precision());     \
    fn(r.get(), x.get(), kRnd);             \
    return r;                               \
  }

ELLAMBDA_UNARY(abs, mpfr_abs)
ELLAMBDA_UNARY(sqrt, mpfr_sqrt)
ELLAMBDA_UNARY(cbrt, mpfr_cbrt)
ELLAMBDA_UNARY(exp, mpfr_exp)
ELLAMBDA_UNARY(log, mpfr_log)
ELLAMBDA_UNARY(sin, mpfr_sin)
ELLAMBDA_UNARY(cos, mpfr_cos)

#undef ELLAMBDA_UNARY

Real root(const Real& x, unsigned long n) {
  Real r = Real::zero(x.precision());
  mpfr_rootn_ui(r.get(), x.get(), n, kRnd);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::zero(max_prec(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r = Real::zero(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = x;
  mpfr_mul_2si(r.get(), r.get(), e, kRnd);
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }
Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }

// ---------------------------------------------------------------------------
// Complex

long Complex::precision() const { return max_prec(re_, im_); }

Real Complex::norm() const { return re_ * re_ + im_ * im_; }

Real Complex::abs() const {
  Real r = Real::zero(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), kRnd);
  return r;
}

Real Complex::arg() const {
  // Signed zeros are treated as +0 so negative reals sit on the +pi side.
  if (im_.is_zero()) {
    return re_.sign() < 0 ? Real::pi(precision()) : Real::zero(precision());
  }
  return atan2(im_, re_);
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw Error(ErrorKind::Overflow, "complex division by zero");
  const Real den = o.norm();
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  Real im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  if (o.is_zero()) throw Error(ErrorKind::Overflow, "complex division by zero");
  re_ /= o;
  im_ /= o;
  return *this;
}

Complex operator+(Complex a, long b) {
  a.re_ += b;
  return a;
}
Complex operator-(Complex a, long b) {
  a.re_ -= b;
  return a;
}
Complex operator+(long b, Complex a) { return std::move(a) + b; }
Complex operator-(long b, const Complex& a) { return -a + b; }
Complex operator*(Complex a, long b) {
  a.re_ *= b;
  a.im_ *= b;
  return a;
}
Complex operator*(long b, Complex a) { return std::move(a) * b; }
Complex operator/(Complex a, long b) {
  if (b == 0) throw Error(ErrorKind::Overflow, "complex division by zero");
  a.re_ /= b;
  a.im_ /= b;
  return a;
}
Complex operator/(long b, const Complex& a) { return Complex::from_int(b, a.precision()) / a; }

std::string Complex::to_string(int digits) const {
  std::string im = im_.to_scientific(digits);
  const bool negative = !im.empty() && im.front() == '-';
  return re_.to_scientific(digits) + (negative ? " - " : " + ") + (negative ? im.substr(1) : im) + "i";
}

Complex exp(const Complex& z) {
  const long bits = z.precision();
  const Real mag = exp(z.re());
  Real s = Real::zero(bits);
  Real c = Real::zero(bits);
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), kRnd);
  return Complex(mag * c, mag * s);
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw Error(ErrorKind::Overflow, "logarithm of zero");
  return Complex(log(z.abs()), z.arg());
}

Complex sqrt(const Complex& z) {
  const long bits = z.precision();
  if (z.is_zero()) return Complex::zero(bits);
  if (z.im().is_zero()) {
    if (z.re().sign() > 0) return Complex(sqrt(z.re()), Real::zero(bits));
    return Complex(Real::zero(bits), sqrt(-z.re()));
  }
  const Real r = z.abs();
  if (z.re().sign() >= 0) {
    Real s = sqrt(ldexp(r + z.re(), -1));
    Real t = z.im() / ldexp(s, 1);
    return Complex(std::move(s), std::move(t));
  }
  Real t = sqrt(ldexp(r - z.re(), -1));
  if (z.im().sign() < 0) t = -t;
  Real s = z.im() / ldexp(t, 1);
  return Complex(std::move(s), std::move(t));
}

Complex cbrt(const Complex& z) {
  const long bits = z.precision();
  if (z.is_zero()) return Complex::zero(bits);
  if (z.im().is_zero() && z.re().sign() > 0) return Complex(cbrt(z.re()), Real::zero(bits));
  const Real mag = cbrt(z.abs());
  const Real theta = z.arg() / 3;
  Real s = Real::zero(bits);
  Real c = Real::zero(bits);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRnd);
  return Complex(mag * c, mag * s);
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw Error(ErrorKind::Overflow, "negative power of zero");
    return 1 / pow(z, -n);
  }
  Complex result = Complex::from_int(1, z.precision());
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Real abs(const Complex& z) { return z.abs(); }

const Complex& ensure_finite(const Complex& z, std::string_view where) {
  if (!z.is_finite()) throw Error(ErrorKind::Overflow, "non-finite value in " + std::string(where));
  return z;
}

const Real& ensure_finite(const Real& x, std::string_view where) {
  if (!x.is_finite()) throw Error(ErrorKind::Overflow, "non-finite value in " + std::string(where));
  return x;
}

Real relative_residual(const Complex& a, const Complex& b) {
  const Real scale = max(b.abs(), Real::from_int(1, b.precision()));
  return (a - b).abs() / scale;
}

}  // namespace ellambda
