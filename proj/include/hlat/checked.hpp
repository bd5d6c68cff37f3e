#pragma once

#include <cstdint>
#include <string>

#include "hlat/errors.hpp"

namespace hlat {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a += b * c
inline void fma(Int& acc, Int b, Int c) { acc = add(acc, mul(b, c)); }

template <class Big>
Int narrow(const Big& v) {
  if (v > Big(INT64_MAX) || v < Big(INT64_MIN)) throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

}  // namespace checked

/// Floor division for signed integers (rounds toward negative infinity).
template <class T>
constexpr T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class T>
constexpr T ceil_div(T a, T b) {
  return -floor_div<T>(-a, b);
}

/// Non-negative representative of a mod n.
constexpr Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace hlat
