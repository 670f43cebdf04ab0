#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "dgk/error.hpp"

namespace dgk {

// Exact arithmetic scalar. All graph weights are stored as Rational and
// converted to double on demand, so the two computation modes never mix
// inside one matrix.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", and plain decimals like "0.25" (parsed exactly).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw ParseError("bad number: " + text);
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator: " + text);
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || frac_len == 0) throw ParseError("bad number: " + text);
  Rational num;
  if (num.set_str(digits, 10) != 0) throw ParseError("bad number: " + text);
  Rational den(1);
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational r = num / den;
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational fraction(long p, long q) { return make_rational(p, q); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  // Exact mode: any nonzero pivot is as good as another.
  static bool better_pivot(const Rational& cand, const Rational& cur) {
    return !is_zero(cand) && is_zero(cur);
  }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double fraction(long p, long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static bool is_zero(double x) { return x == 0.0; }
  static bool better_pivot(double cand, double cur) {
    return std::abs(cand) > std::abs(cur);
  }
};

}  // namespace dgk
