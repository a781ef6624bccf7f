#include "cycalc/rational.hpp"

#include <charconv>

namespace cycalc {

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidParams, "zero denominator");
  if (denominator < 0) {
    numerator = checked::neg(numerator);
    denominator = checked::neg(denominator);
  }
  const Int g = checked::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator+(const Rational& o) const {
  const Int g = checked::gcd(den_, o.den_);
  const Int lhs = checked::mul(num_, o.den_ / g);
  const Int rhs = checked::mul(o.num_, den_ / g);
  return {checked::add(lhs, rhs), checked::mul(den_, o.den_ / g)};
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce first so intermediate products stay small.
  const Int g1 = checked::gcd(num_, o.den_);
  const Int g2 = checked::gcd(o.num_, den_);
  const Int a = g1 == 0 ? 0 : num_ / g1;
  const Int d = g1 == 0 ? o.den_ : o.den_ / g1;
  const Int c = g2 == 0 ? 0 : o.num_ / g2;
  const Int b = g2 == 0 ? den_ : den_ / g2;
  return {checked::mul(a, c), checked::mul(b, d)};
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error(ErrorKind::InvalidParams, "division by zero");
  return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text, text)};
  const Int num = parse_int(text.substr(0, slash), text);
  const Int den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return {num, den};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cycalc
