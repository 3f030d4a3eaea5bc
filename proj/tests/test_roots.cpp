#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trih/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

using trih::BigFloat;
using trih::Rational;
using trih::UniPoly;

namespace {

UniPoly linear(long a, long b) {  // b*t + a
  return UniPoly({Rational(a), Rational(b)});
}

// Independent count oracle: sample exact signs of the squarefree part on a
// grid finer than the (numerically estimated) minimal root gap. Returns
// nullopt when the estimated gap is too small for the grid to be trusted.
std::optional<int> grid_count_oracle(const UniPoly& p, const Rational& lo,
                                     const Rational& hi) {
  UniPoly q = p.squarefree_part();
  if (q.degree() <= 0) return 0;
  int d = q.degree();
  UniPoly m = q.monic();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -m.coeff(i).to_double();
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
  std::vector<double> real_roots;
  for (int i = 0; i < d; ++i) {
    auto z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-8) real_roots.push_back(z.real());
  }
  std::sort(real_roots.begin(), real_roots.end());
  double gap = 1.0;
  for (std::size_t i = 1; i < real_roots.size(); ++i)
    gap = std::min(gap, real_roots[i] - real_roots[i - 1]);
  for (double r : real_roots) {
    gap = std::min(gap, std::abs(r - lo.to_double()));
    gap = std::min(gap, std::abs(r - hi.to_double()));
  }
  if (gap < 1.0 / 128.0) return std::nullopt;  // grid would be untrustworthy

  // exact dyadic step below gap/2
  Rational step(1, 512);
  while (step.to_double() > gap / 4.0) step = step / Rational(2);
  int count = 0;
  int prev = 0;  // last nonzero sign; 0 = no anchor yet
  for (Rational g = lo; g <= hi; g += step) {
    int s = q.eval(g).sign();
    if (s == 0) {
      if (lo < g && g < hi) ++count;
      prev = 0;
      continue;
    }
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

TEST_CASE("counts on hand-built products") {
  UniPoly p = linear(-1, 1) * linear(-2, 1) * linear(-3, 1);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(5, 2)) == 2);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(4)) == 3);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(1, 2)) == 0);
}

TEST_CASE("multiple roots are counted once") {
  UniPoly x1 = linear(-1, 1);
  UniPoly p = x1 * x1 * x1 * linear(-2, 1);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(3)) == 2);
}

TEST_CASE("endpoint roots are excluded, interior roots kept") {
  // roots at 0 and 5: none inside (0, 2)
  UniPoly p = linear(0, 1) * linear(-5, 1);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(2)) == 0);
  // roots at 0 and 1/1024: the tiny interior root must still be seen
  UniPoly q = linear(0, 1) * UniPoly({Rational(-1, 1024), Rational(1)});
  CHECK(trih::sturm_root_count(q, Rational(0), Rational(2)) == 1);
  // root exactly at both endpoints
  UniPoly r = linear(0, 1) * linear(-2, 1) * linear(-1, 1);
  CHECK(trih::sturm_root_count(r, Rational(0), Rational(2)) == 1);
}

TEST_CASE("dense integer root ladder") {
  UniPoly p = UniPoly({Rational(1)});
  for (long k = 1; k <= 10; ++k) p = p * linear(-k, 1);
  CHECK(trih::sturm_root_count(p, Rational(0), Rational(21, 2)) == 10);
  CHECK(trih::sturm_root_count(p, Rational(5, 2), Rational(7, 2)) == 1);
  CHECK(trih::sturm_root_count(p, Rational(-5), Rational(1, 2)) == 0);
}

TEST_CASE("rejects degenerate inputs") {
  CHECK_THROWS_AS(trih::sturm_root_count(UniPoly(), Rational(0), Rational(1)),
                  std::domain_error);
  UniPoly p = linear(-1, 1);
  CHECK_THROWS_AS(trih::sturm_root_count(p, Rational(1), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::sturm_root_count(p, Rational(2), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("isolation of sqrt(2) to 30 digits") {
  UniPoly p({Rational(-2), Rational(0), Rational(1)});
  auto root = trih::isolate_root(p, Rational(0), Rational(2), 30);
  Rational v = root.value.value();
  Rational tol = Rational(1, 10).pow(30);
  // |v - sqrt(2)| < 10^-30 implies |v^2 - 2| < 10^-30 * (v + sqrt(2)) < 3e-30
  CHECK((v * v - Rational(2)).abs() < tol * Rational(3));
  CHECK(!root.exact);
  CHECK(root.bracket_hi - root.bracket_lo < tol);
  CHECK(p.eval(root.bracket_lo).sign() * p.eval(root.bracket_hi).sign() < 0);
}

TEST_CASE("isolation lands exactly on rational roots") {
  // unique root at 1, hit by the first midpoint of (0, 2)
  UniPoly p = linear(-1, 1) * linear(-1, 1);
  auto root = trih::isolate_root(p, Rational(0), Rational(2), 20);
  CHECK(root.exact);
  CHECK(root.value.value() == Rational(1));
  CHECK(root.bracket_lo == root.bracket_hi);
}

TEST_CASE("isolation requires exactly one root") {
  UniPoly two = linear(-1, 1) * linear(-2, 1);
  CHECK_THROWS_AS(trih::isolate_root(two, Rational(0), Rational(3), 10),
                  std::domain_error);
  UniPoly none = linear(-5, 1);
  CHECK_THROWS_AS(trih::isolate_root(none, Rational(0), Rational(3), 10),
                  std::domain_error);
}

TEST_CASE("bracket straddles a sign change even for even multiplicity") {
  UniPoly x1 = linear(-1, 1);
  // (t-1)^2 (t-3): squarefree part changes sign across t=1
  UniPoly p = x1 * x1 * linear(-3, 1);
  auto root = trih::isolate_root(p, Rational(0), Rational(2), 15);
  if (!root.exact) {
    UniPoly ps = p.squarefree_part();
    CHECK(ps.eval(root.bracket_lo).sign() *
              ps.eval(root.bracket_hi).sign() < 0);
  }
  Rational v = root.value.value();
  CHECK((v - Rational(1)).abs() < Rational(1, 10).pow(15));
}

TEST_CASE("sturm count agrees with a sign-grid oracle") {
  std::mt19937_64 rng(20230505u);
  std::uniform_int_distribution<int> deg(1, 5);
  std::uniform_int_distribution<long> coeff(-9, 9);
  Rational lo(-4), hi(4);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 120; ++i) {
    int d = deg(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = Rational(coeff(rng));
    if (c.back().is_zero()) c.back() = Rational(1);
    UniPoly p(std::move(c));
    auto oracle = grid_count_oracle(p, lo, hi);
    if (!oracle) continue;
    ++checked;
    CHECK(trih::sturm_root_count(p, lo, hi) == *oracle);
  }
  // the filter must not starve the comparison
  CHECK(checked >= 100);
}
