// Exact rational scalar backing every coefficient in the engine.
// Thin value wrapper over GMP's mpq_class; values are kept canonical
// (reduced, denominator > 0) at all times.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace trih {

using Integer = mpz_class;

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  // Accepts an optionally signed integer or "num/den" pair, nothing else.
  // No whitespace, no decimals, no empty numerator or denominator.
  static Rational parse(const std::string& text);

  // Accepts everything parse() does, plus plain decimals such as "0.25".
  static Rational parse_decimal(const std::string& text);

  const mpq_class& mpq() const { return v_; }
  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // True when the value is a square of a rational (requires value >= 0).
  bool is_perfect_square() const;
  // Exact square root; precondition is_perfect_square().
  Rational sqrt_exact() const;

  Rational abs() const;
  Rational inv() const;  // throws on zero
  Rational pow(long e) const;  // negative e requires a nonzero value

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  // "num/den", or just "num" for integers.
  std::string str() const;

  double to_double() const { return v_.get_d(); }

private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// k!! for k >= -1, with (-1)!! = 0!! = 1.
Integer double_factorial(long k);

}  // namespace trih
