#include "trih/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace trih {

namespace {

mpq_class canonical(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// mpz_class rejects a leading '+'
Integer to_integer(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational::Rational(long num, long den) : v_(canonical(Integer(num), Integer(den))) {}

Rational::Rational(const Integer& num, const Integer& den)
    : v_(canonical(num, den)) {}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw std::invalid_argument("rational: cannot parse '" + text + "'");
    return Rational(to_integer(text), Integer(1));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) ||
      den.find('-') != std::string::npos || den.find('+') != std::string::npos)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  Integer d = to_integer(den);
  if (sgn(d) == 0)
    throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  return Rational(to_integer(num), d);
}

Rational Rational::parse_decimal(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return parse(text);
  if (text.find('/') != std::string::npos)
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  std::string head = text.substr(0, dot);
  std::string tail = text.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    neg = head[0] == '-';
    head = head.substr(1);
  }
  if (head.empty() && tail.empty())
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  for (const std::string* part : {&head, &tail})
    for (char ch : *part)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
  Integer scale = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
  Integer units = head.empty() ? Integer(0) : Integer(head);
  Integer frac = tail.empty() ? Integer(0) : Integer(tail);
  Integer num = units * scale + frac;
  if (neg) num = -num;
  return Rational(num, scale);
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t());
}

Rational Rational::sqrt_exact() const {
  if (!is_perfect_square())
    throw std::domain_error("rational: sqrt_exact of a non-square");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("rational: inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("rational: negative power of zero");
    return Rational(0);
  }
  Rational base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
  return Rational(n, d);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer double_factorial(long k) {
  if (k < -1) throw std::domain_error("double_factorial: k < -1");
  Integer acc = 1;
  for (long i = k; i >= 2; i -= 2) acc *= i;
  return acc;
}

}  // namespace trih
