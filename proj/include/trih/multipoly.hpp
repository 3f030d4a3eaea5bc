// Multivariate polynomials over the exact rationals, with formal
// derivations: linear maps D with D(fg) = D(f) g + f D(g) determined by
// their values on the ring variables. The identity checks in the moments
// module run entirely on this type.
#pragma once

#include "trih/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trih {

// Fixed, ordered variable list shared by every polynomial of a ring.
class PolyRing {
public:
  explicit PolyRing(std::vector<std::string> vars);

  std::size_t arity() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i); }
  std::size_t index_of(const std::string& name) const;  // throws if unknown

private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

class MultiPoly {
public:
  // exponent vector, one slot per ring variable
  using Monomial = std::vector<unsigned>;

  static MultiPoly zero(RingPtr ring);
  static MultiPoly constant(RingPtr ring, Rational c);
  static MultiPoly var(RingPtr ring, std::size_t index);
  static MultiPoly var(RingPtr ring, const std::string& name);
  static MultiPoly term(RingPtr ring, Monomial m, Rational c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& k) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Replaces one variable by a polynomial of the same ring.
  MultiPoly substitute(std::size_t index, const MultiPoly& value) const;

  // Exact quotient *this / divisor, or nullopt if the division leaves a
  // remainder (single-divisor reduction in lexicographic order).
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  std::string str() const;

private:
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  void add_term(const Monomial& m, const Rational& c);
  static void require_same_ring(const MultiPoly& a, const MultiPoly& b);

  RingPtr ring_;
  std::map<Monomial, Rational> terms_;  // nonzero coefficients only
};

// A derivation is fixed by an image polynomial for every ring variable.
class Derivation {
public:
  Derivation(RingPtr ring, std::vector<MultiPoly> images);

  const RingPtr& ring() const { return ring_; }
  const MultiPoly& image(std::size_t var) const { return images_.at(var); }

private:
  RingPtr ring_;
  std::vector<MultiPoly> images_;
};

// D extended from variables to the whole ring by linearity and Leibniz.
MultiPoly formal_derive(const MultiPoly& p, const Derivation& d);

}  // namespace trih
