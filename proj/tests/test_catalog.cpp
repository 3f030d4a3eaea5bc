#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trih/catalog.hpp"

#include <stdexcept>

using trih::CurvatureSpectrum;
using trih::Family;
using trih::ParamMap;
using trih::Rational;
using trih::SpaceForm;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f :
       {Family::SmallSphere, Family::CliffordTorus, Family::EuclideanSphere,
        Family::SphericalCylinder, Family::GeodesicSphere, Family::Horosphere,
        Family::Equidistant, Family::HyperbolicCylinder}) {
    auto back = trih::family_from_name(trih::family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!trih::family_from_name("torus").has_value());
  CHECK(trih::families_for_curvature(rat(1)).size() == 2);
  CHECK(trih::families_for_curvature(rat(0)).size() == 2);
  CHECK(trih::families_for_curvature(rat(-1)).size() == 4);
  CHECK(trih::families_for_curvature(rat(2)).empty());
}

TEST_CASE("small sphere spectrum and invariants") {
  SpaceForm sf(4, rat(1));
  auto spec = trih::build_spectrum(sf, Family::SmallSphere, {{"r2", rat(1, 3)}});
  REQUIRE(spec.distinct_count() == 1);
  CHECK(spec.entries()[0].multiplicity == 4);
  CHECK(spec.entries()[0].value.square_rational() == rat(2));
  CHECK(spec.entries()[0].value.sign() > 0);
  auto inv = trih::invariants(sf, spec);
  CHECK(inv.H2.rational_value() == rat(2));
  CHECK(inv.S.rational_value() == rat(8));
  CHECK(inv.R.rational_value() == rat(36));
  CHECK(trih::gauss_scalar_defect(sf, spec) == rat(0));
}

TEST_CASE("clifford torus spectrum and invariants") {
  SpaceForm sf(3, rat(1));
  ParamMap params{{"p", rat(2)}, {"q", rat(1)}, {"a2", rat(1, 2)}};
  auto spec = trih::build_spectrum(sf, Family::CliffordTorus, params);
  REQUIRE(spec.distinct_count() == 2);
  CHECK(spec.entries()[0].value.rational_value() == rat(1));
  CHECK(spec.entries()[0].multiplicity == 2);
  CHECK(spec.entries()[1].value.rational_value() == rat(-1));
  CHECK(spec.entries()[1].multiplicity == 1);
  auto inv = trih::invariants(sf, spec);
  CHECK(inv.nH.rational_value() == rat(1));
  CHECK(inv.H2.rational_value() == rat(1, 9));
  CHECK(inv.S.rational_value() == rat(3));
  CHECK(inv.R.rational_value() == rat(4));
  CHECK(trih::gauss_scalar_defect(sf, spec) == rat(0));

  // the balanced torus a2 = p/n is minimal
  auto minimal = trih::build_spectrum(
      sf, Family::CliffordTorus,
      {{"p", rat(2)}, {"q", rat(1)}, {"a2", rat(2, 3)}});
  CHECK(trih::invariants(sf, minimal).nH.is_zero());
}

TEST_CASE("flat families") {
  SpaceForm sf(4, rat(0));
  auto sphere = trih::build_spectrum(sf, Family::EuclideanSphere, {{"r", rat(2)}});
  CHECK(sphere.entries()[0].value.rational_value() == rat(1, 2));
  CHECK(sphere.entries()[0].multiplicity == 4);

  auto cyl = trih::build_spectrum(sf, Family::SphericalCylinder,
                                  {{"p", rat(2)}, {"r", rat(1)}});
  auto inv = trih::invariants(sf, cyl);
  CHECK(inv.nH.rational_value() == rat(2));
  CHECK(inv.S.rational_value() == rat(2));
  CHECK(trih::gauss_scalar_defect(sf, cyl) == rat(0));
}

TEST_CASE("hyperbolic families") {
  SpaceForm sf(3, rat(-1));
  auto geo = trih::build_spectrum(sf, Family::GeodesicSphere,
                                  {{"lambda", rat(3, 2)}});
  CHECK(geo.entries()[0].value.rational_value() == rat(3, 2));

  auto horo = trih::build_spectrum(sf, Family::Horosphere, {});
  auto horo_inv = trih::invariants(sf, horo);
  CHECK(horo_inv.H2.rational_value() == rat(1));
  // horospheres are intrinsically flat
  CHECK(horo_inv.R.rational_value() == rat(0));

  auto equi = trih::build_spectrum(sf, Family::Equidistant,
                                   {{"lambda", rat(1, 2)}});
  CHECK(equi.entries()[0].value.rational_value() == rat(1, 2));

  auto hcyl = trih::build_spectrum(sf, Family::HyperbolicCylinder,
                                   {{"p", rat(1)}, {"lambda", rat(2)}});
  auto inv = trih::invariants(sf, hcyl);
  CHECK(inv.nH.rational_value() == rat(3));
  CHECK(inv.S.rational_value() == rat(9, 2));
  CHECK(inv.R.rational_value() == rat(-3, 2));
  CHECK(trih::gauss_scalar_defect(sf, hcyl) == rat(0));
}

TEST_CASE("invariants are orientation independent") {
  SpaceForm sf(5, rat(-1));
  auto spec = trih::build_spectrum(sf, Family::HyperbolicCylinder,
                                   {{"p", rat(2)}, {"lambda", rat(7, 4)}});
  auto inv = trih::invariants(sf, spec);
  auto inv_f = trih::invariants(sf, spec.flipped());
  CHECK(inv.H2.rational_value() == inv_f.H2.rational_value());
  CHECK(inv.S.rational_value() == inv_f.S.rational_value());
  CHECK(inv.R.rational_value() == inv_f.R.rational_value());
  CHECK(inv.nH.rational_value() == -inv_f.nH.rational_value());
}

TEST_CASE("parameter validation") {
  SpaceForm s4(4, rat(1));
  SpaceForm f4(4, rat(0));
  SpaceForm h4(4, rat(-1));

  // range violations
  CHECK_THROWS_AS(trih::build_spectrum(s4, Family::SmallSphere, {{"r2", rat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(s4, Family::SmallSphere, {{"r2", rat(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(s4, Family::SmallSphere, {{"r2", rat(-1, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(f4, Family::EuclideanSphere, {{"r", rat(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(h4, Family::GeodesicSphere, {{"lambda", rat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(h4, Family::Equidistant, {{"lambda", rat(1)}}),
                  std::invalid_argument);

  // factor dimensions
  CHECK_THROWS_AS(
      trih::build_spectrum(s4, Family::CliffordTorus,
                           {{"p", rat(2)}, {"q", rat(3)}, {"a2", rat(1, 2)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      trih::build_spectrum(s4, Family::CliffordTorus,
                           {{"p", rat(3, 2)}, {"q", rat(5, 2)}, {"a2", rat(1, 2)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(f4, Family::SphericalCylinder,
                                       {{"p", rat(4)}, {"r", rat(1)}}),
                  std::invalid_argument);

  // ambient curvature mismatch
  CHECK_THROWS_AS(trih::build_spectrum(f4, Family::SmallSphere, {{"r2", rat(1, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(s4, Family::Horosphere, {}),
                  std::invalid_argument);

  // missing and unknown parameters
  CHECK_THROWS_AS(trih::build_spectrum(s4, Family::SmallSphere, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(h4, Family::Horosphere, {{"r", rat(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(trih::build_spectrum(f4, Family::EuclideanSphere,
                                       {{"r", rat(1)}, {"extra", rat(1)}}),
                  std::invalid_argument);
}
