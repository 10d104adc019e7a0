#include "ellambda/quad_field.hpp"

#include <cctype>

#include "ellambda/error.hpp"

namespace ellambda {

bool is_squarefree(long m) {
  if (m < 2) return false;
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

QuadFieldElem::QuadFieldElem(BigRational a, BigRational b, long m)
    : a_(std::move(a)), b_(std::move(b)), m_(m) {
  if (m_ != 1 && !is_squarefree(m_)) {
    throw Error(ErrorKind::InvalidArgument, "field discriminant " + std::to_string(m_) + " is not squarefree");
  }
  if (m_ == 1 && !b_.is_zero()) {
    a_ += b_;
    b_ = 0;
  }
}

QuadFieldElem QuadFieldElem::parse(std::string_view text, long m) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty quadratic-field literal");
  const auto bad = [&] {
    return Error(ErrorKind::InvalidArgument, "malformed quadratic-field literal \"" + std::string(text) + "\"");
  };
  if (s.back() != 'r') {
    if (s.find('r') != std::string::npos) throw bad();
    return QuadFieldElem(BigRational::parse(s));
  }
  s.pop_back();
  // Split at the last sign that is not leading: that starts the b term.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  BigRational a = 0;
  std::string b_text = s;
  if (split != std::string::npos) {
    a = BigRational::parse(s.substr(0, split));
    b_text = s.substr(split);
  }
  if (b_text.empty() || b_text == "+") b_text = "1";
  if (b_text == "-") b_text = "-1";
  try {
    return QuadFieldElem(a, BigRational::parse(b_text), m);
  } catch (const Error&) {
    throw bad();
  }
}

BigRational QuadFieldElem::field_norm() const { return a_ * a_ - b_ * b_ * BigRational(m_); }

QuadFieldElem QuadFieldElem::inverse() const {
  const BigRational n = field_norm();
  if (n.is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero in quadratic field");
  return QuadFieldElem(a_ / n, -b_ / n, m_);
}

QuadFieldElem QuadFieldElem::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadFieldElem result(1);
  QuadFieldElem base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

long QuadFieldElem::joint_field(const QuadFieldElem& o) const {
  if (is_rational() && o.is_rational()) return m_ != 1 ? m_ : o.m_;
  if (is_rational()) return o.m_;
  if (o.is_rational()) return m_;
  if (m_ != o.m_) {
    throw Error(ErrorKind::MixedField,
                "cannot combine elements of Q(sqrt " + std::to_string(m_) + ") and Q(sqrt " + std::to_string(o.m_) + ")");
  }
  return m_;
}

QuadFieldElem& QuadFieldElem::operator+=(const QuadFieldElem& o) {
  m_ = joint_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadFieldElem& QuadFieldElem::operator-=(const QuadFieldElem& o) {
  m_ = joint_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadFieldElem& QuadFieldElem::operator*=(const QuadFieldElem& o) {
  const long m = joint_field(o);
  BigRational a = a_ * o.a_ + b_ * o.b_ * BigRational(m);
  BigRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  m_ = m;
  return *this;
}

bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
  return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
}

Complex QuadFieldElem::to_complex(long bits) const {
  Real value = Real::from_rational(a_, bits);
  if (!b_.is_zero()) value += Real::from_rational(b_, bits) * sqrt(Real::from_int(m_, bits));
  return Complex(std::move(value));
}

std::string QuadFieldElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string();
  const std::string b = b_.to_string();
  if (!out.empty() && b.front() != '-') out += "+";
  return out + b + "*sqrt(" + std::to_string(m_) + ")";
}

QuadPoly poly_mul(const QuadPoly& lhs, const QuadPoly& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  QuadPoly out(lhs.size() + rhs.size() - 1, QuadFieldElem(0));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t k = 0; k < rhs.size(); ++k) out[i + k] += lhs[i] * rhs[k];
  }
  return out;
}

QuadPoly quad_poly_expand(const std::array<QuadraticFactor, 3>& factors, const QuadFieldElem& scalar) {
  long field = scalar.is_rational() ? 1 : scalar.m();
  for (const auto& f : factors) {
    for (const auto& c : f) {
      if (c.is_rational()) continue;
      if (field == 1) {
        field = c.m();
      } else if (field != c.m()) {
        throw Error(ErrorKind::MixedField, "factors use different quadratic fields");
      }
    }
  }
  QuadPoly out{scalar};
  for (const auto& f : factors) out = poly_mul(out, QuadPoly(f.begin(), f.end()));
  return out;
}

}  // namespace ellambda
