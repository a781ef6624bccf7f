#pragma once

#include <cstdint>
#include <numeric>

#include "cycalc/error.hpp"

namespace cycalc {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction overflow");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// Floor-free exact division; the caller guarantees b divides a.
inline Int exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0) throw Error(ErrorKind::InternalInconsistency, "inexact integer division");
  return a / b;
}

inline Int mod2(Int a) noexcept { return a & 1; }

inline Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

}  // namespace checked
}  // namespace cycalc
