// Dense univariate polynomials over the exact rationals. Coefficients are
// stored lowest degree first with no trailing zeros; the zero polynomial is
// the empty vector and reports degree -1.
#pragma once

#include "trih/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace trih {

class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs)
      : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(Rational c) { return UniPoly({std::move(c)}); }
  static UniPoly monomial(Rational coeff, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const Rational& leading() const;  // rejects the zero polynomial

  Rational eval(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rational& k) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  // Euclidean division; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const UniPoly& divisor) const;

  // Monic greatest common divisor (1 when coprime, 0 only for gcd(0,0)).
  static UniPoly gcd(UniPoly a, UniPoly b);

  // p / gcd(p, p'): same roots, all simple. Result is made monic.
  UniPoly squarefree_part() const;

  UniPoly monic() const;  // rejects the zero polynomial

  // Human-readable form such as "t^3 - 2*t + 1/2".
  std::string str(const std::string& var = "t") const;

private:
  void trim();

  std::vector<Rational> c_;
};

struct UniPoly::DivMod {
  UniPoly quot, rem;
};

}  // namespace trih
