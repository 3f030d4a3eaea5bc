// Triharmonicity test for hypersurfaces with constant mean curvature and
// constant scalar invariants in a space form.
//
// For such a hypersurface the triharmonic condition collapses to a scalar
// equation: either the mean curvature vanishes (the minimal case, which is
// always triharmonic), or the residual
//
//   T1 = lap_S + S^2 - n c S - n^2 c H^2
//
// must vanish (lap_S = 0 when S is constant) together with the tangential
// condition, which holds automatically when the spectrum is constant.
#pragma once

#include "trih/geometry.hpp"

namespace trih {

enum class Verdict { Minimal, ProperTriharmonic, NotTriharmonic };

const char* verdict_name(Verdict v);

struct TriharmonicReport {
  InvariantSet invariants;
  Scalar residual;        // T1
  bool tangential_ok;     // gradient condition; true for constant spectra
  Verdict verdict;
};

// T1 for the given invariants; lap_S is the Laplacian of S, zero for the
// constant-spectrum hypersurfaces the catalog produces.
Scalar triharmonic_residual(const SpaceForm& sf, const InvariantSet& inv,
                            const Scalar& lap_S = Scalar(0));

// Full classification of an exact constant spectrum. The verdict is
// Minimal exactly when H = 0; ProperTriharmonic requires H != 0, T1 = 0
// and the tangential condition.
TriharmonicReport classify(const SpaceForm& sf, const CurvatureSpectrum& spec);

}  // namespace trih
