#include "trih/conditions.hpp"

#include <stdexcept>

namespace trih {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Minimal: return "Minimal";
    case Verdict::ProperTriharmonic: return "ProperTriharmonic";
    case Verdict::NotTriharmonic: return "NotTriharmonic";
  }
  throw std::logic_error("verdict: unknown tag");
}

Scalar triharmonic_residual(const SpaceForm& sf, const InvariantSet& inv,
                            const Scalar& lap_S) {
  Rational n(sf.n);
  return lap_S + inv.S.square() - Scalar(n * sf.c) * inv.S -
         Scalar(n * n * sf.c) * inv.H2;
}

TriharmonicReport classify(const SpaceForm& sf,
                           const CurvatureSpectrum& spec) {
  if (!spec.all_exact())
    throw std::domain_error("classify: spectrum must be exact");
  InvariantSet inv = invariants(sf, spec);
  // S >= n H^2 holds for every real spectrum (Cauchy-Schwarz); a violation
  // means the inputs do not describe principal curvatures at all.
  Rational S = inv.S.rational_value();
  Rational H2 = inv.H2.rational_value();
  if (S < Rational(sf.n) * H2)
    throw std::logic_error("classify: S < n H^2, impossible spectrum");
  Scalar residual = triharmonic_residual(sf, inv);
  TriharmonicReport rep{inv, residual, true, Verdict::NotTriharmonic};
  if (H2.is_zero())
    rep.verdict = Verdict::Minimal;
  else if (residual.is_zero() && rep.tangential_ok)
    rep.verdict = Verdict::ProperTriharmonic;
  return rep;
}

}  // namespace trih
