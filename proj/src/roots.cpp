#include "trih/roots.hpp"

#include <stdexcept>
#include <vector>

namespace trih {

namespace {

// Squarefree part with any roots at lo or hi divided out exactly, so the
// remaining roots in [lo, hi] are simple and interior.
UniPoly prepared(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("roots: empty interval");
  UniPoly ps = p.squarefree_part();
  for (const Rational* end : {&lo, &hi}) {
    if (ps.eval(*end).is_zero()) {
      UniPoly factor({-*end, Rational(1)});
      auto dm = ps.divmod(factor);
      // simple root: dividing once clears it
      ps = dm.quot;
    }
  }
  return ps;
}

std::vector<UniPoly> sturm_chain(const UniPoly& ps) {
  std::vector<UniPoly> chain{ps, ps.derivative()};
  while (!chain.back().is_zero()) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    chain.push_back(-a.divmod(b).rem);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const UniPoly& s : chain) {
    int sg = s.eval(x).sign();
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

}  // namespace

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  UniPoly ps = prepared(p, lo, hi);
  if (ps.degree() <= 0) return 0;
  auto chain = sturm_chain(ps);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

IsolatedRoot isolate_root(const UniPoly& p, const Rational& lo,
                          const Rational& hi, int digits) {
  if (digits < 1) throw std::invalid_argument("roots: digits must be >= 1");
  int count = sturm_root_count(p, lo, hi);
  if (count != 1)
    throw std::domain_error("roots: interval holds " + std::to_string(count) +
                            " roots, need exactly 1");
  UniPoly ps = prepared(p, lo, hi);
  Rational a = lo, b = hi;
  int sa = ps.eval(a).sign();
  int sb = ps.eval(b).sign();
  if (sa == 0 || sb == 0 || sa == sb)
    throw std::logic_error("roots: endpoint signs inconsistent with a single root");
  Rational tol = Rational(1, 10).pow(digits);
  while (b - a >= tol) {
    Rational mid = (a + b) / Rational(2);
    int sm = ps.eval(mid).sign();
    if (sm == 0) {
      IsolatedRoot out;
      out.value = BigFloat(mid, digits);
      out.bracket_lo = mid;
      out.bracket_hi = mid;
      out.exact = true;
      return out;
    }
    if (sm == sa)
      a = mid;
    else
      b = mid;
  }
  IsolatedRoot out;
  out.value = BigFloat((a + b) / Rational(2), digits);
  out.bracket_lo = a;
  out.bracket_hi = b;
  out.exact = false;
  return out;
}

}  // namespace trih
