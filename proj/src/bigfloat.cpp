#include "trih/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace trih {

namespace {

Integer pow10(int d) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(d));
  return p;
}

// Nearest integer to sqrt(n); ties cannot occur (sqrt of an integer is
// either an integer or irrational).
Integer isqrt_nearest(const Integer& n) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  // round up when n > s^2 + s, i.e. sqrt(n) > s + 1/2
  if (n > s * s + s) s += 1;
  return s;
}

}  // namespace

BigFloat::BigFloat(Rational value, int digits)
    : v_(std::move(value)), digits_(digits) {
  if (digits < 1) throw std::invalid_argument("bigfloat: digits must be >= 1");
}

BigFloat BigFloat::sqrt() const {
  if (v_.sign() < 0) throw std::domain_error("bigfloat: sqrt of a negative");
  if (v_.is_zero()) return BigFloat(Rational(0), digits_);
  // sqrt(p/q) = sqrt(p*q)/q; scale by 10^digits and round the integer root.
  Integer scale = pow10(digits_);
  Integer n = v_.num() * v_.den() * scale * scale;
  Integer s = isqrt_nearest(n);
  return BigFloat(Rational(s, v_.den() * scale), digits_);
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.v_ + b.v_, std::max(a.digits_, b.digits_));
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.v_ - b.v_, std::max(a.digits_, b.digits_));
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.v_ * b.v_, std::max(a.digits_, b.digits_));
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  return BigFloat(a.v_ / b.v_, std::max(a.digits_, b.digits_));
}

std::string BigFloat::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("bigfloat: digits must be >= 1");
  Integer scale = pow10(digits);
  // round |v| * scale to nearest, ties away from zero
  Integer num = v_.num() * scale;
  Integer den = v_.den();
  bool neg = sgn(num) < 0;
  if (neg) num = -num;
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  Integer units = q / scale;
  Integer frac = q % scale;
  std::string f = frac.get_str();
  std::string out;
  if (neg && (sgn(units) != 0 || sgn(frac) != 0)) out += '-';
  out += units.get_str();
  out += '.';
  out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
  out += f;
  return out;
}

}  // namespace trih
