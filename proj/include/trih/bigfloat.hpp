// Adjustable-precision decimal scalar. The value is held as an exact
// rational; the digit count only governs the operations that must round
// (square roots, decimal rendering), which round to nearest at 10^-digits.
// Field operations stay exact, so error tracking reduces to counting
// square roots.
#pragma once

#include "trih/rational.hpp"

namespace trih {

class BigFloat {
public:
  static constexpr int kDefaultDigits = 40;

  BigFloat() : v_(0), digits_(kDefaultDigits) {}
  explicit BigFloat(Rational value, int digits = kDefaultDigits);
  BigFloat(long value, int digits) : BigFloat(Rational(value), digits) {}

  const Rational& value() const { return v_; }
  int digits() const { return digits_; }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  BigFloat abs() const { return BigFloat(v_.abs(), digits_); }

  // Nearest rational approximation of the square root with
  // |result - sqrt(value)| <= (1/2) * 10^-digits. Throws on negatives.
  BigFloat sqrt() const;

  BigFloat operator-() const { return BigFloat(-v_, digits_); }
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    return a.v_ <=> b.v_;
  }

  // Fixed-point rendering with exactly `digits` fractional digits,
  // rounded to nearest (ties away from zero).
  std::string to_decimal() const { return to_decimal(digits_); }
  std::string to_decimal(int digits) const;

private:
  Rational v_;
  int digits_;
};

}  // namespace trih
