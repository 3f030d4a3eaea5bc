#include "trih/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace trih {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("ring: no variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("ring: duplicate variable " + vars_[i]);
}

std::size_t PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw std::invalid_argument("ring: unknown variable " + name);
}

MultiPoly MultiPoly::zero(RingPtr ring) { return MultiPoly(std::move(ring)); }

MultiPoly MultiPoly::constant(RingPtr ring, Rational c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero())
    p.terms_.emplace(Monomial(p.ring_->arity(), 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, std::size_t index) {
  if (index >= ring->arity())
    throw std::invalid_argument("multipoly: variable index out of range");
  MultiPoly p(std::move(ring));
  Monomial m(p.ring_->arity(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

MultiPoly MultiPoly::var(RingPtr ring, const std::string& name) {
  std::size_t i = ring->index_of(name);
  return var(std::move(ring), i);
}

MultiPoly MultiPoly::term(RingPtr ring, Monomial m, Rational c) {
  if (m.size() != ring->arity())
    throw std::invalid_argument("multipoly: monomial arity mismatch");
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

void MultiPoly::require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ != b.ring_)
    throw std::invalid_argument("multipoly: mixed rings");
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const { return scaled(Rational(-1)); }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same_ring(a, b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + (-b);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same_ring(a, b);
  MultiPoly out = MultiPoly::zero(a.ring_);
  const std::size_t arity = a.ring_->arity();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultiPoly::Monomial m(arity);
      for (std::size_t i = 0; i < arity; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& k) const {
  MultiPoly out = zero(ring_);
  if (k.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = constant(ring_, Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly::require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::substitute(std::size_t index, const MultiPoly& value) const {
  require_same_ring(*this, value);
  if (index >= ring_->arity())
    throw std::invalid_argument("multipoly: variable index out of range");
  MultiPoly out = zero(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned e = rest[index];
    rest[index] = 0;
    MultiPoly term = zero(ring_);
    term.terms_.emplace(rest, c);
    out = out + term * value.pow(e);
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  require_same_ring(*this, divisor);
  if (divisor.is_zero())
    throw std::domain_error("multipoly: division by zero");
  const std::size_t arity = ring_->arity();
  // leading term in the map's lexicographic order
  const auto& [lm, lc] = *divisor.terms_.rbegin();
  MultiPoly quot = zero(ring_);
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    Monomial t(arity);
    for (std::size_t i = 0; i < arity; ++i) {
      if (rm[i] < lm[i]) return std::nullopt;
      t[i] = rm[i] - lm[i];
    }
    MultiPoly step = zero(ring_);
    step.terms_.emplace(std::move(t), rc / lc);
    quot = quot + step;
    rem = rem - step * divisor;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_var = false;
    for (unsigned e : m) has_var = has_var || e > 0;
    if (!has_var || mag != Rational(1)) os << mag.str();
    bool dot = !has_var || mag != Rational(1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (dot) os << "*";
      os << ring_->name(i);
      if (m[i] > 1) os << "^" << m[i];
      dot = true;
    }
  }
  return os.str();
}

Derivation::Derivation(RingPtr ring, std::vector<MultiPoly> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (images_.size() != ring_->arity())
    throw std::invalid_argument(
        "derivation: need one image per ring variable");
  for (const auto& img : images_)
    if (img.ring() != ring_)
      throw std::invalid_argument("derivation: image from a different ring");
}

MultiPoly formal_derive(const MultiPoly& p, const Derivation& d) {
  if (p.ring() != d.ring())
    throw std::invalid_argument("formal_derive: polynomial from a different ring");
  RingPtr ring = p.ring();
  MultiPoly out = MultiPoly::zero(ring);
  for (const auto& [m, c] : p.terms()) {
    // D(c * prod x_i^{e_i}) = c * sum_i e_i x^(e with e_i lowered) D(x_i)
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      MultiPoly::Monomial lowered = m;
      lowered[i] -= 1;
      MultiPoly partial = MultiPoly::term(
          ring, std::move(lowered), c * Rational(static_cast<long>(m[i])));
      out = out + partial * d.image(i);
    }
  }
  return out;
}

}  // namespace trih
