#include "trih/scalar.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace trih {

Scalar::Exact Scalar::normalized(Rational r, Rational s) {
  if (s.sign() < 0) throw std::domain_error("scalar: negative radicand");
  if (r.is_zero() || s.is_zero()) return {Rational(0), Rational(1)};
  if (s.is_perfect_square()) return {r * s.sqrt_exact(), Rational(1)};
  return {std::move(r), std::move(s)};
}

Scalar::Scalar(Rational r) : rep_(Exact{std::move(r), Rational(1)}) {}

Scalar Scalar::radical(Rational coeff, Rational radicand) {
  return Scalar(normalized(std::move(coeff), std::move(radicand)));
}

Scalar Scalar::approx(BigFloat x) { return Scalar(std::move(x)); }

bool Scalar::is_rational() const {
  const Exact* e = std::get_if<Exact>(&rep_);
  return e && e->s == Rational(1);
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("scalar: not a rational value");
  return std::get<Exact>(rep_).r;
}

const Rational& Scalar::coeff() const {
  if (!is_exact()) throw std::domain_error("scalar: not exact");
  return std::get<Exact>(rep_).r;
}

const Rational& Scalar::radicand() const {
  if (!is_exact()) throw std::domain_error("scalar: not exact");
  return std::get<Exact>(rep_).s;
}

const BigFloat& Scalar::approx_value() const {
  if (is_exact()) throw std::domain_error("scalar: not numeric");
  return std::get<BigFloat>(rep_);
}

int Scalar::sign() const {
  if (const Exact* e = std::get_if<Exact>(&rep_)) return e->r.sign();
  return std::get<BigFloat>(rep_).sign();
}

Scalar Scalar::operator-() const {
  if (const Exact* e = std::get_if<Exact>(&rep_))
    return Scalar(Exact{-e->r, e->s});
  return Scalar(-std::get<BigFloat>(rep_));
}

namespace {

// b rewritten on a's radicand when the ratio of radicands is a rational
// square; otherwise no exact sum exists in this representation.
bool compatible(const Rational& sa, const Rational& sb, Rational& scale) {
  if (sa == sb) {
    scale = Rational(1);
    return true;
  }
  Rational ratio = sb / sa;
  if (!ratio.is_perfect_square()) return false;
  scale = ratio.sqrt_exact();
  return true;
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.sign() == 0) return b;
    if (b.sign() == 0) return a;
    Rational scale(0);
    if (!compatible(a.radicand(), b.radicand(), scale))
      throw std::domain_error("scalar: sum of incompatible radicals (" +
                              a.str() + " + " + b.str() + ")");
    return Scalar::radical(a.coeff() + b.coeff() * scale, a.radicand());
  }
  int digits = BigFloat::kDefaultDigits;
  if (!a.is_exact()) digits = std::max(digits, a.approx_value().digits());
  if (!b.is_exact()) digits = std::max(digits, b.approx_value().digits());
  return Scalar::approx(a.to_bigfloat(digits) + b.to_bigfloat(digits));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact())
    return Scalar::radical(a.coeff() * b.coeff(), a.radicand() * b.radicand());
  int digits = BigFloat::kDefaultDigits;
  if (!a.is_exact()) digits = std::max(digits, a.approx_value().digits());
  if (!b.is_exact()) digits = std::max(digits, b.approx_value().digits());
  return Scalar::approx(a.to_bigfloat(digits) * b.to_bigfloat(digits));
}

Scalar Scalar::square() const {
  if (is_exact()) return Scalar(square_rational());
  const BigFloat& b = std::get<BigFloat>(rep_);
  return Scalar::approx(b * b);
}

Rational Scalar::square_rational() const {
  if (!is_exact()) throw std::domain_error("scalar: not exact");
  const Exact& e = std::get<Exact>(rep_);
  return e.r * e.r * e.s;
}

bool Scalar::equals(const Scalar& o) const {
  if (is_exact() != o.is_exact()) return false;
  if (is_exact())
    return coeff() == o.coeff() && radicand() == o.radicand();
  return approx_value() == o.approx_value();
}

BigFloat Scalar::to_bigfloat(int digits) const {
  if (const Exact* e = std::get_if<Exact>(&rep_)) {
    if (e->s == Rational(1)) return BigFloat(e->r, digits);
    return BigFloat(e->r, digits) * BigFloat(e->s, digits).sqrt();
  }
  const BigFloat& b = std::get<BigFloat>(rep_);
  return BigFloat(b.value(), std::max(digits, b.digits()));
}

std::string Scalar::str() const {
  if (const Exact* e = std::get_if<Exact>(&rep_)) {
    if (e->s == Rational(1)) return e->r.str();
    std::string root = "sqrt(" + e->s.str() + ")";
    if (e->r == Rational(1)) return root;
    if (e->r == Rational(-1)) return "-" + root;
    return e->r.str() + "*" + root;
  }
  return std::get<BigFloat>(rep_).to_decimal();
}

}  // namespace trih
