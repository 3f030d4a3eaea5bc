// Exact real-root counting and isolation for rational univariate
// polynomials: Sturm chains over Q plus sign-checked bisection.
#pragma once

#include "trih/bigfloat.hpp"
#include "trih/unipoly.hpp"

namespace trih {

// Number of distinct real roots of p in the open interval (lo, hi).
// Multiplicities are ignored (the count is taken on the squarefree part).
// Roots landing exactly on an endpoint are divided out first, so they are
// never counted; lo < hi and p != 0 are required.
int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi);

struct IsolatedRoot {
  BigFloat value;        // midpoint of the final bracket (the root when exact)
  Rational bracket_lo;   // final bracket; the squarefree part of p changes
  Rational bracket_hi;   // sign across it unless exact is set
  bool exact = false;    // bisection landed on the root itself
};

// Locates the unique root of p in (lo, hi) to within 10^-digits by
// bisection on the squarefree part. Rejects intervals that do not contain
// exactly one distinct root. |value - root| < 10^-digits holds on return,
// and the bracket sign change is verified in exact arithmetic.
IsolatedRoot isolate_root(const UniPoly& p, const Rational& lo,
                          const Rational& hi, int digits);

}  // namespace trih
