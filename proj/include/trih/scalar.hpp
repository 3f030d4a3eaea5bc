// Scalar values for principal curvatures and derived invariants.
//
// Exact values are kept as r*sqrt(s) with r, s rational and s >= 0 (plain
// rationals are the s = 1 case). This single radical layer is closed under
// the operations the curvature catalog needs: products always stay inside,
// sums stay inside whenever the radicands are compatible (equal, or with a
// rational square ratio). Values that fall outside, and every caller that
// asked for decimals, use the adjustable-precision numeric branch instead.
#pragma once

#include "trih/bigfloat.hpp"
#include "trih/rational.hpp"

#include <string>
#include <variant>

namespace trih {

class Scalar {
public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(Rational r);  // implicit: rationals embed
  Scalar(long n) : Scalar(Rational(n)) {}

  // coeff * sqrt(radicand); radicand must be >= 0.
  static Scalar radical(Rational coeff, Rational radicand);
  static Scalar sqrt_of(Rational radicand) {
    return radical(Rational(1), std::move(radicand));
  }
  static Scalar approx(BigFloat x);

  bool is_exact() const { return std::holds_alternative<Exact>(rep_); }
  bool is_rational() const;
  Rational rational_value() const;       // requires is_rational()
  const Rational& coeff() const;         // requires is_exact()
  const Rational& radicand() const;      // requires is_exact()
  const BigFloat& approx_value() const;  // requires !is_exact()

  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar operator-() const;
  // Addition of exact values with incompatible radicands throws; callers
  // that cannot guarantee compatibility should convert to BigFloat first.
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  Scalar square() const;
  // The square of an exact value is always rational: (r*sqrt(s))^2 = r^2 s.
  Rational square_rational() const;  // requires is_exact()

  bool equals(const Scalar& o) const;

  BigFloat to_bigfloat(int digits = BigFloat::kDefaultDigits) const;

  // "p/q", "p/q*sqrt(s)", or a decimal for numeric values.
  std::string str() const;

private:
  struct Exact {
    Rational r;  // coefficient
    Rational s;  // radicand, >= 0; s = 1 exactly when the value is rational
  };
  explicit Scalar(Exact e) : rep_(std::move(e)) {}
  explicit Scalar(BigFloat b) : rep_(std::move(b)) {}

  static Exact normalized(Rational r, Rational s);

  std::variant<Exact, BigFloat> rep_;
};

}  // namespace trih
