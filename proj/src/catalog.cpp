#include "trih/catalog.hpp"

#include <stdexcept>

namespace trih {

namespace {

struct FamilyInfo {
  Family tag;
  const char* name;
  long curvature;  // required ambient c
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& table() {
  static const std::vector<FamilyInfo> t = {
      {Family::SmallSphere, "small-sphere", 1, {"r2"}},
      {Family::CliffordTorus, "clifford", 1, {"p", "q", "a2"}},
      {Family::EuclideanSphere, "sphere", 0, {"r"}},
      {Family::SphericalCylinder, "cylinder", 0, {"p", "r"}},
      {Family::GeodesicSphere, "geodesic-sphere", -1, {"lambda"}},
      {Family::Horosphere, "horosphere", -1, {}},
      {Family::Equidistant, "equidistant", -1, {"lambda"}},
      {Family::HyperbolicCylinder, "hcylinder", -1, {"p", "lambda"}},
  };
  return t;
}

const FamilyInfo& info(Family f) {
  for (const auto& fi : table())
    if (fi.tag == f) return fi;
  throw std::logic_error("catalog: unknown family tag");
}

[[noreturn]] void bad_param(Family f, const std::string& why) {
  throw std::invalid_argument(std::string("catalog: ") + family_name(f) +
                              ": " + why);
}

Rational get(Family f, const ParamMap& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) bad_param(f, "missing parameter '" + key + "'");
  return it->second;
}

// positive integer strictly below n (a factor dimension)
int get_factor_dim(Family f, const ParamMap& params, const std::string& key,
                   int n) {
  Rational v = get(f, params, key);
  if (!v.is_integer() || v.sign() <= 0 || v >= Rational(n))
    bad_param(f, "parameter '" + key + "' must be an integer in [1, n-1]");
  return static_cast<int>(v.num().get_si());
}

}  // namespace

const char* family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& fi : table())
    if (name == fi.name) return fi.tag;
  return std::nullopt;
}

std::vector<Family> families_for_curvature(const Rational& c) {
  std::vector<Family> out;
  for (const auto& fi : table())
    if (c == Rational(fi.curvature)) out.push_back(fi.tag);
  return out;
}

std::vector<std::string> family_params(Family f) { return info(f).params; }

CurvatureSpectrum build_spectrum(const SpaceForm& sf, Family f,
                                 const ParamMap& params) {
  const FamilyInfo& fi = info(f);
  if (sf.c != Rational(fi.curvature))
    bad_param(f, "requires ambient curvature " + std::to_string(fi.curvature) +
                     ", got " + sf.c.str());
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& want : fi.params) known = known || key == want;
    if (!known) bad_param(f, "unknown parameter '" + key + "'");
  }
  const Rational one(1);
  switch (f) {
    case Family::SmallSphere: {
      Rational r2 = get(f, params, "r2");
      if (!(Rational(0) < r2 && r2 < one))
        bad_param(f, "r2 must lie in (0, 1)");
      return CurvatureSpectrum(
          {{Scalar::sqrt_of((one - r2) / r2), sf.n}});
    }
    case Family::CliffordTorus: {
      int p = get_factor_dim(f, params, "p", sf.n);
      int q = get_factor_dim(f, params, "q", sf.n);
      if (p + q != sf.n) bad_param(f, "factor dimensions must satisfy p + q = n");
      Rational a2 = get(f, params, "a2");
      if (!(Rational(0) < a2 && a2 < one))
        bad_param(f, "a2 must lie in (0, 1)");
      return CurvatureSpectrum(
          {{Scalar::sqrt_of((one - a2) / a2), p},
           {Scalar::radical(Rational(-1), a2 / (one - a2)), q}});
    }
    case Family::EuclideanSphere: {
      Rational r = get(f, params, "r");
      if (r.sign() <= 0) bad_param(f, "r must be positive");
      return CurvatureSpectrum({{Scalar(r.inv()), sf.n}});
    }
    case Family::SphericalCylinder: {
      int p = get_factor_dim(f, params, "p", sf.n);
      Rational r = get(f, params, "r");
      if (r.sign() <= 0) bad_param(f, "r must be positive");
      return CurvatureSpectrum(
          {{Scalar(r.inv()), p}, {Scalar(0), sf.n - p}});
    }
    case Family::GeodesicSphere: {
      Rational lam = get(f, params, "lambda");
      if (!(lam > one)) bad_param(f, "lambda must exceed 1");
      return CurvatureSpectrum({{Scalar(lam), sf.n}});
    }
    case Family::Horosphere:
      return CurvatureSpectrum({{Scalar(one), sf.n}});
    case Family::Equidistant: {
      Rational lam = get(f, params, "lambda");
      if (!(Rational(0) < lam && lam < one))
        bad_param(f, "lambda must lie in (0, 1)");
      return CurvatureSpectrum({{Scalar(lam), sf.n}});
    }
    case Family::HyperbolicCylinder: {
      int p = get_factor_dim(f, params, "p", sf.n);
      Rational lam = get(f, params, "lambda");
      if (!(lam > one)) bad_param(f, "lambda must exceed 1");
      return CurvatureSpectrum(
          {{Scalar(lam), p}, {Scalar(lam.inv()), sf.n - p}});
    }
  }
  throw std::logic_error("catalog: unreachable");
}

}  // namespace trih
