#include "trih/corollary.hpp"

#include "trih/conditions.hpp"
#include "trih/geometry.hpp"

#include <stdexcept>
#include <vector>

namespace trih {

namespace {

// Resultant of two polynomials in u whose coefficients live in Q[h],
// via the Sylvester determinant with Bareiss fraction-free elimination
// (every division below is exact).
UniPoly sylvester_resultant(const std::vector<UniPoly>& a,
                            const std::vector<UniPoly>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t k = da + db;
  std::vector<std::vector<UniPoly>> m(k, std::vector<UniPoly>(k));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];

  int sign = 1;
  UniPoly prev = UniPoly::constant(Rational(1));
  for (std::size_t col = 0; col + 1 < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) return UniPoly();
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      for (std::size_t c = col + 1; c < k; ++c) {
        UniPoly num = m[r][c] * m[col][col] - m[r][col] * m[col][c];
        auto dm = num.divmod(prev);
        if (!dm.rem.is_zero())
          throw std::logic_error("resultant: non-exact Bareiss step");
        m[r][c] = dm.quot;
      }
      m[r][col] = UniPoly();
    }
    prev = m[col][col];
  }
  return sign < 0 ? -m[k - 1][k - 1] : m[k - 1][k - 1];
}

}  // namespace

UniPoly f_n_poly(int n) {
  if (n < 3) throw std::invalid_argument("f_n: n must be >= 3");
  Rational N(n);
  Rational c3 = N.pow(4);
  Rational c2 = Rational(-2) * N * N * (N * N - Rational(5) * N + Rational(5));
  Rational c1 = -(N - Rational(1)) * (Rational(2) * N - Rational(5)) *
                (Rational(3) * N - Rational(5));
  Rational c0 = -(N - Rational(1)) * (N - Rational(2)).pow(2);
  return UniPoly({c0, c1, c2, c3});
}

IsolatedRoot t0(int n, int digits) {
  UniPoly f = f_n_poly(n);
  int count = sturm_root_count(f, Rational(0), Rational(2));
  if (count != 1)
    throw std::logic_error("t0: expected exactly one root in (0,2), found " +
                           std::to_string(count));
  return isolate_root(f, Rational(0), Rational(2), digits);
}

BigFloat clifford_a2(int n, const BigFloat& H) {
  if (n < 3) throw std::invalid_argument("clifford_a2: n must be >= 3");
  if (!(BigFloat(Rational(0), H.digits()) < H))
    throw std::invalid_argument("clifford_a2: H must be positive");
  int d = H.digits();
  auto bf = [&](const Rational& r) { return BigFloat(r, d); };
  BigFloat nH = bf(Rational(n)) * H;
  BigFloat disc = (nH * nH + bf(Rational(4 * (n - 1)))).sqrt();
  BigFloat denom = nH * nH + bf(Rational(2L * n * (n - 1))) + nH * disc;
  return bf(Rational(2L * (n - 1) * (n - 1))) / denom;
}

CorollaryResult corollary_crosscheck(int n, int digits) {
  if (digits < 4)
    throw std::invalid_argument("crosscheck: digits must be >= 4");
  const int work = digits + 10;

  IsolatedRoot root = t0(n, work);
  BigFloat h = root.value;  // t0 ~ H^2
  BigFloat H = h.sqrt();
  BigFloat a2 = clifford_a2(n, H);

  auto bf = [&](const Rational& r) { return BigFloat(r, work); };
  BigFloat one = bf(Rational(1));
  BigFloat lam1 = ((one - a2) / a2).sqrt();
  BigFloat lam2 = -(a2 / (one - a2)).sqrt();

  SpaceForm sf(n, Rational(1));
  CurvatureSpectrum spectrum({{Scalar::approx(lam1), n - 1},
                              {Scalar::approx(lam2), 1}});
  InvariantSet inv = invariants(sf, spectrum);
  BigFloat h2 = inv.H2.to_bigfloat(work);
  BigFloat residual = triharmonic_residual(sf, inv).to_bigfloat(work);

  CorollaryResult res{n,
                      root,
                      a2,
                      (h2 - h).abs(),
                      residual,
                      bf(Rational(10).pow(3 - digits)),
                      true,
                      false,
                      false};
  res.h2_ok = res.h2_defect < res.tolerance;
  res.residual_ok = res.residual.abs() < res.tolerance;
  return res;
}

ResultantReport torus_residual_resultant(int n) {
  if (n < 3) throw std::invalid_argument("resultant: n must be >= 3");
  Rational N(n);
  UniPoly h = UniPoly::monomial(Rational(1), 1);
  UniPoly one = UniPoly::constant(Rational(1));

  // with u = (1-a^2)/a^2 the torus has S = (n-1)u + 1/u and
  // n^2 H^2 = (n-1)^2 u + 1/u - 2(n-1); clearing 1/u denominators:
  //   p1 = ((n-1)u^2+1)^2 - n u ((n-1)u^2+1) - n^2 h u^2   (residual = 0)
  //   p2 = n^2 h u - (n-1)^2 u^2 + 2(n-1) u - 1             (H^2 relation)
  // listed lowest u-power first
  std::vector<UniPoly> p1 = {
      one,
      one.scaled(-N),
      h.scaled(-N * N) + one.scaled(Rational(2) * (N - Rational(1))),
      one.scaled(-N * (N - Rational(1))),
      one.scaled((N - Rational(1)).pow(2)),
  };
  std::vector<UniPoly> p2 = {
      -one,
      h.scaled(N * N) + one.scaled(Rational(2) * (N - Rational(1))),
      one.scaled(-(N - Rational(1)).pow(2)),
  };

  ResultantReport rep;
  rep.resultant = sylvester_resultant(p1, p2);
  auto dm = rep.resultant.divmod(f_n_poly(n));
  rep.divisible = dm.rem.is_zero();
  if (rep.divisible) rep.cofactor = dm.quot;
  return rep;
}

}  // namespace trih
