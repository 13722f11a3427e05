#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghom {

using Integer = boost::multiprecision::cpp_int;

namespace arith {

// Thrown by the checked machine-integer kernels; callers catch it and redo the
// computation with Integer.
struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}
inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline Integer add(const Integer& a, const Integer& b) { return a + b; }
inline Integer sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer neg(const Integer& a) { return -a; }
inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// a - q*b
template <class T>
T sub_mul(const T& a, const T& q, const T& b) {
  return sub(a, mul(q, b));
}

// Floor division; b != 0.
template <class T>
T floor_div(const T& a, const T& b) {
  if (b == -1) return neg(a);
  T q = a / b;
  T r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) q = sub(q, T(1));
  return q;
}

// Truncating quotient, guarded against MIN / -1.
template <class T>
T trunc_div(const T& a, const T& b) {
  if (b == -1) return neg(a);
  return a / b;
}

// Returns (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g.
template <class T>
std::tuple<T, T, T> ext_gcd(T a, T b) {
  T x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    T q = trunc_div(a, b);
    T r = sub_mul(a, q, b);
    a = std::move(b);
    b = std::move(r);
    T nx = sub_mul(x0, q, x1);
    x0 = std::move(x1);
    x1 = std::move(nx);
    T ny = sub_mul(y0, q, y1);
    y0 = std::move(y1);
    y1 = std::move(ny);
  }
  if (a < 0) return {neg(a), neg(x0), neg(y0)};
  return {a, x0, y0};
}

inline Integer to_integer(std::int64_t v) { return Integer(v); }
inline Integer to_integer(const Integer& v) { return v; }

template <class T>
T from_integer(const Integer& v);

template <>
inline Integer from_integer<Integer>(const Integer& v) {
  return v;
}

template <>
inline std::int64_t from_integer<std::int64_t>(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return static_cast<std::int64_t>(v);
}

}  // namespace arith

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace ghom
