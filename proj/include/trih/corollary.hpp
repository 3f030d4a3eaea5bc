// The Clifford-torus branch of the sphere classification: the cubic whose
// root t0 bounds the admissible squared mean curvature, the torus radius
// induced by a given H, and two independent consistency checks tying them
// to the triharmonic residual — one numeric end-to-end, one by exact
// elimination of the radius.
#pragma once

#include "trih/bigfloat.hpp"
#include "trih/roots.hpp"
#include "trih/unipoly.hpp"

namespace trih {

// n^4 t^3 - 2n^2(n^2-5n+5) t^2 - (n-1)(2n-5)(3n-5) t - (n-1)(n-2)^2.
// Requires n >= 3 (at n = 2 the constant term vanishes and the torus
// branch degenerates).
UniPoly f_n_poly(int n);

// The unique root of f_n in (0, 2), isolated to the requested number of
// digits. Throws logic_error if the Sturm count on (0, 2) is not 1 —
// uniqueness is part of the claim, not an assumption.
IsolatedRoot t0(int n, int digits);

// Squared radius of the sphere factor of the torus with mean curvature
// H > 0:  a^2 = 2(n-1)^2 / (n^2 H^2 + 2n(n-1) + nH sqrt(n^2 H^2 + 4(n-1))).
// Result lies in (0, 1); precision follows H.
BigFloat clifford_a2(int n, const BigFloat& H);

struct CorollaryResult {
  int n;
  IsolatedRoot t0;     // bracket doubles as the error bound
  BigFloat a2;
  BigFloat h2_defect;  // |H^2 of the built torus - t0|
  BigFloat residual;   // triharmonic residual of the built torus
  BigFloat tolerance;  // 10^(3-digits)
  bool sturm_unique;
  bool h2_ok;
  bool residual_ok;

  bool passed() const { return sturm_unique && h2_ok && residual_ok; }
};

// End-to-end numeric check: take H = sqrt(t0), build the induced torus
// S^{n-1}(a) x S^1(sqrt(1-a^2)), and verify its H^2 reproduces t0 and its
// residual vanishes to working precision.
CorollaryResult corollary_crosscheck(int n, int digits);

struct ResultantReport {
  UniPoly resultant;  // in h = H^2, exact
  bool divisible;     // f_n divides the resultant
  UniPoly cofactor;   // resultant / f_n when divisible, else zero
};

// Exact counterpart of the crosscheck: eliminate u = (1-a^2)/a^2 between
// the torus's residual equation and its mean-curvature relation. The
// resultant must be f_n times an extraneous factor, which is reported
// rather than hidden.
ResultantReport torus_residual_resultant(int n);

}  // namespace trih
