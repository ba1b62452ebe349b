#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace coxbraid {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign_of(const Rational& x) { return x.sign(); }

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline std::string to_string(const Rational& x) {
  Rational v = x;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// Reduced fraction p/q with small integral parts, used for rotation angles
// theta = k/n where exactness matters but magnitudes stay tiny.
struct Fraction {
  long num = 0;
  long den = 1;

  Fraction() = default;
  Fraction(long n, long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) { num = -num; den = -den; }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Fraction operator+(Fraction a, Fraction b) {
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend auto operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  Rational to_rational() const { return Rational(num, den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace coxbraid
