#include "trih/geometry.hpp"

#include <stdexcept>
#include <utility>

namespace trih {

SpaceForm::SpaceForm(int n_, Rational c_) : n(n_), c(std::move(c_)) {
  if (n < 2) throw std::invalid_argument("space form: dimension must be >= 2");
}

CurvatureSpectrum::CurvatureSpectrum(std::vector<SpectrumEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("spectrum: no entries");
  for (const auto& e : entries_)
    if (e.multiplicity < 1)
      throw std::invalid_argument("spectrum: multiplicity must be >= 1");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i].value.is_exact() && entries_[j].value.is_exact() &&
          entries_[i].value.equals(entries_[j].value))
        throw std::invalid_argument("spectrum: repeated curvature value");
}

int CurvatureSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

bool CurvatureSpectrum::all_exact() const {
  for (const auto& e : entries_)
    if (!e.value.is_exact()) return false;
  return true;
}

CurvatureSpectrum CurvatureSpectrum::flipped() const {
  std::vector<SpectrumEntry> flipped;
  flipped.reserve(entries_.size());
  for (const auto& e : entries_)
    flipped.push_back({-e.value, e.multiplicity});
  return CurvatureSpectrum(std::move(flipped));
}

InvariantSet invariants(const SpaceForm& sf, const CurvatureSpectrum& spec) {
  if (spec.total_multiplicity() != sf.n)
    throw std::invalid_argument(
        "invariants: multiplicities sum to " +
        std::to_string(spec.total_multiplicity()) + ", expected " +
        std::to_string(sf.n));
  Scalar nH(0), S(0);
  for (const auto& e : spec.entries()) {
    Scalar m(Rational(e.multiplicity));
    nH = nH + m * e.value;
    S = S + m * e.value.square();
  }
  Rational n(sf.n);
  Scalar H2 = nH.square() * Scalar(Rational(1) / (n * n));
  Scalar R = Scalar(n * (n - Rational(1)) * sf.c) +
             Scalar(n * n) * H2 - S;
  return {nH, H2, S, R};
}

Rational gauss_scalar_defect(const SpaceForm& sf,
                             const CurvatureSpectrum& spec) {
  if (!spec.all_exact())
    throw std::domain_error("gauss check: spectrum must be exact");
  InvariantSet inv = invariants(sf, spec);
  Rational n(sf.n);
  // sum over ordered pairs i != j of (c + k_i k_j), grouped by entry
  Scalar pair_sum(n * (n - Rational(1)) * sf.c);
  const auto& es = spec.entries();
  for (std::size_t a = 0; a < es.size(); ++a) {
    Rational ma(es[a].multiplicity);
    pair_sum = pair_sum +
               Scalar(ma * (ma - Rational(1))) * es[a].value.square();
    for (std::size_t b = 0; b < es.size(); ++b) {
      if (a == b) continue;
      Rational mb(es[b].multiplicity);
      pair_sum = pair_sum + Scalar(ma * mb) * (es[a].value * es[b].value);
    }
  }
  Scalar defect = pair_sum - inv.R;
  return defect.rational_value();
}

}  // namespace trih
