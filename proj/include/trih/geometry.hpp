// Constant-curvature ambient spaces and the principal-curvature data of a
// hypersurface with constant spectrum, together with the derived invariants
// (mean curvature, squared norm of the shape operator, scalar curvature).
#pragma once

#include "trih/scalar.hpp"

#include <vector>

namespace trih {

// Simply connected ambient space of dimension n+1 and constant sectional
// curvature c; the hypersurface dimension n is at least 2.
struct SpaceForm {
  int n;
  Rational c;

  SpaceForm(int n_, Rational c_);
};

struct SpectrumEntry {
  Scalar value;
  int multiplicity;
};

// Principal curvatures with multiplicities, constant over the hypersurface.
// Entries hold pairwise distinct values (checked on the exact branch) and
// positive multiplicities.
class CurvatureSpectrum {
public:
  explicit CurvatureSpectrum(std::vector<SpectrumEntry> entries);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t distinct_count() const { return entries_.size(); }
  int total_multiplicity() const;
  bool all_exact() const;

  // Orientation reversal negates every principal curvature.
  CurvatureSpectrum flipped() const;

private:
  std::vector<SpectrumEntry> entries_;
};

// nH is the trace of the shape operator, S its squared Frobenius norm,
// H2 the squared mean curvature (nH/n)^2, and R the scalar curvature
// n(n-1)c + n^2 H2 - S of the induced metric.
struct InvariantSet {
  Scalar nH;
  Scalar H2;
  Scalar S;
  Scalar R;
};

// Requires the spectrum multiplicities to sum to sf.n.
InvariantSet invariants(const SpaceForm& sf, const CurvatureSpectrum& spec);

// Recomputes the scalar curvature directly from the Gauss equation as
// sum over ordered pairs i != j of (c + k_i k_j) and returns the defect
// against the InvariantSet value. Exact spectra only; always 0 when the
// invariants are computed consistently.
Rational gauss_scalar_defect(const SpaceForm& sf,
                             const CurvatureSpectrum& spec);

}  // namespace trih
