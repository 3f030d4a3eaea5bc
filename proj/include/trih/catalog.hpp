// Catalog of the standard isoparametric hypersurfaces with one or two
// distinct principal curvatures in the three model ambient spaces. Each
// builder validates its parameter ranges and produces an exact spectrum.
//
// Orientation conventions (all parameters rational):
//   small-sphere      c = 1   radius^2 = r2 in (0,1):
//                       +sqrt((1-r2)/r2) with multiplicity n
//   clifford          c = 1   product of spheres, a2 in (0,1), p + q = n:
//                       +sqrt((1-a2)/a2) mult p, -sqrt(a2/(1-a2)) mult q
//   sphere            c = 0   radius r > 0: 1/r mult n
//   cylinder          c = 0   spherical factor of dimension p, radius r:
//                       1/r mult p, 0 mult n-p
//   geodesic-sphere   c = -1  lambda > 1 mult n
//   horosphere        c = -1  1 mult n
//   equidistant       c = -1  0 < lambda < 1 mult n
//   hcylinder         c = -1  lambda > 1 mult p, 1/lambda mult n-p
#pragma once

#include "trih/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trih {

enum class Family {
  SmallSphere,
  CliffordTorus,
  EuclideanSphere,
  SphericalCylinder,
  GeodesicSphere,
  Horosphere,
  Equidistant,
  HyperbolicCylinder,
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::vector<Family> families_for_curvature(const Rational& c);

// Parameter keys per family (all values exact rationals):
//   small-sphere: r2        clifford: p, q, a2      sphere: r
//   cylinder: p, r          geodesic-sphere: lambda horosphere: none
//   equidistant: lambda     hcylinder: p, lambda
using ParamMap = std::map<std::string, Rational>;

// Names of the parameters the family requires, in canonical order.
std::vector<std::string> family_params(Family f);

// Validates the parameter set and ranges against the ambient space and
// builds the exact principal curvature spectrum.
CurvatureSpectrum build_spectrum(const SpaceForm& sf, Family f,
                                 const ParamMap& params);

}  // namespace trih
