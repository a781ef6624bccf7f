#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "cycalc/checked.hpp"

namespace cycalc {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(Int value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int numerator, Int denominator);

  Int numerator() const noexcept { return num_; }
  Int denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational&) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  /// Accepts "p" or "p/q" (optional sign on p).
  static Rational parse(std::string_view text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cycalc
