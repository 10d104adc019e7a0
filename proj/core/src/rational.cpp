#include "ellambda/rational.hpp"

#include <cctype>

#include "ellambda/error.hpp"

namespace ellambda {

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator");
  }
  value_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(num));
  }
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::InvalidArgument, "malformed rational \"" + std::string(text) + "\"");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorKind::InvalidArgument, "zero denominator in \"" + std::string(text) + "\"");
  }
  return BigRational(mpq_class(parse_integer(num), d));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::pow(long exponent) const {
  if (exponent < 0) return (BigRational(1) / *this).pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(mpq_class(num, den));
}

}  // namespace ellambda
