#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cdcw/multigraph.hpp"

namespace cdcw {

// Exact rational on 64-bit components with 128-bit intermediates. All rank
// and coefficient computations go through this type or through fraction-free
// integer elimination; there is no floating point anywhere in the library.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      fail_resource("rational overflow beyond 64 bits");
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    if (den == 0) fail_internal("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rational make128(__int128 n, __int128 d) {
    if (d == 0) fail_internal("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rational r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.den + (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.den - (__int128)b.num * a.den,
                   (__int128)a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail_internal("rational division by zero");
    return make128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num = -r.num;
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace cdcw
