#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trih/moments.hpp"

#include <random>

using trih::Certificate;
using trih::Derivation;
using trih::MultiPoly;
using trih::PolyRing;
using trih::PowerMode;
using trih::Rational;
using trih::RingPtr;
using trih::UniformRateCase;
using trih::formal_derive;

TEST_CASE("closed-form coefficients") {
  Rational c(1);
  CHECK(trih::moment_coefficient(0, c) == Rational(1));
  CHECK(trih::moment_coefficient(1, c) == Rational(0));
  CHECK(trih::moment_coefficient(3, c) == Rational(0));
  CHECK(trih::moment_coefficient(2, c) == Rational(-1, 2));
  CHECK(trih::moment_coefficient(4, c) == Rational(3, 8));
  CHECK(trih::moment_coefficient(6, c) == Rational(-5, 16));
  CHECK(trih::moment_coefficient(2, Rational(-1)) == Rational(1, 2));
  CHECK(trih::moment_coefficient(4, Rational(-2)) == Rational(3, 2));
  CHECK(trih::moment_coefficient(8, Rational(0)) == Rational(0));
  CHECK_THROWS_AS(trih::moment_coefficient(-1, c), std::invalid_argument);

  CHECK(trih::closed_form_moment(0, c, Rational(3)) == Rational(3));
  CHECK(trih::closed_form_moment(2, c, Rational(3)) == Rational(-3, 2));
  CHECK(trih::closed_form_moment(5, c, Rational(3)) == Rational(0));
  CHECK(trih::closed_form_moment(2, Rational(1, 4), Rational(-8)) ==
        Rational(1));
}

TEST_CASE("recurrence holds on the closed forms") {
  for (const Rational& c :
       {Rational(1), Rational(-1), Rational(0), Rational(3, 7)}) {
    auto rep = trih::moment_recurrence_check(30, c, Rational(2));
    CHECK(rep.ok);
    CHECK(rep.first_violation == -1);
  }
  // a deliberately wrong sequence is caught at its first bad step: with
  // coefficient sign flipped the q = 1 step reads 2 f(2) - c f(0)
  Rational c(1), nH(5);
  Rational bad_step = Rational(2) * trih::closed_form_moment(2, c, nH) -
                      c * trih::closed_form_moment(0, c, nH);
  CHECK(bad_step != Rational(0));
  CHECK_THROWS_AS(trih::moment_recurrence_check(0, c, nH),
                  std::invalid_argument);
}

TEST_CASE("derivation identity for the moments, formally") {
  CHECK(trih::moment_derivation_check(8, 3));
  CHECK(trih::moment_derivation_check(5, 1));
  CHECK(trih::moment_derivation_check(5, 2));
  CHECK(trih::moment_derivation_check(3, 4));
  CHECK_THROWS_AS(trih::moment_derivation_check(0), std::invalid_argument);
  CHECK_THROWS_AS(trih::moment_derivation_check(3, 0), std::invalid_argument);
}

TEST_CASE("derivation identity fails under a perturbed rate rule") {
  // same setup as the library check but with e1(P) = P^2 - c; the q = 0
  // step survives (it never touches the P rule's constant term through a
  // second factor), the q = 1 step breaks by 2 c f(0)
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"n1", "mu1", "P1", "n2", "mu2", "P2", "c"});
  auto var = [&](const char* n) { return MultiPoly::var(ring, n); };
  MultiPoly c = var("c");
  Derivation d(ring, {MultiPoly::zero(ring), var("mu1") * var("P1"),
                      var("P1") * var("P1") - c, MultiPoly::zero(ring),
                      var("mu2") * var("P2"), var("P2") * var("P2") - c,
                      MultiPoly::zero(ring)});
  auto f = [&](unsigned q) {
    return var("n1") * var("mu1") * var("P1").pow(q) +
           var("n2") * var("mu2") * var("P2").pow(q);
  };
  CHECK(formal_derive(f(0), d) == f(1));
  MultiPoly lhs = formal_derive(f(1), d);
  MultiPoly rhs = f(2).scaled(Rational(2)) + c * f(0);
  CHECK(!(lhs == rhs));
  CHECK(rhs - lhs == (c * f(0)).scaled(Rational(2)));
}

TEST_CASE("vandermonde determinants, golden values") {
  using V = std::vector<Rational>;
  CHECK(trih::vandermonde_det(V{Rational(1), Rational(2)}, {1, 3}) ==
        Rational(6));
  CHECK(trih::vandermonde_det(V{Rational(1), Rational(2)}, {1, 2}) ==
        Rational(2));
  CHECK(trih::vandermonde_det(V{Rational(1), Rational(2), Rational(3)},
                              {1, 2, 3}) == Rational(12));
  CHECK(trih::vandermonde_det(V{Rational(2), Rational(2)}, {1, 3}) ==
        Rational(0));
  CHECK(trih::vandermonde_det(V{Rational(1, 2), Rational(-1, 2)}, {1, 3}) ==
        Rational(0));
  CHECK_THROWS_AS(trih::vandermonde_det(V{}, {}), std::invalid_argument);
  CHECK_THROWS_AS(trih::vandermonde_det(V{Rational(1)}, {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("vandermonde factorizations on random inputs") {
  std::mt19937 rng(60251);
  std::uniform_int_distribution<int> kd(1, 6);
  std::uniform_int_distribution<long> numd(-9, 9);
  std::uniform_int_distribution<long> dend(1, 5);
  for (int it = 0; it < 1000; ++it) {
    int k = kd(rng);
    std::vector<Rational> values;
    for (int i = 0; i < k; ++i)
      values.emplace_back(numd(rng), dend(rng));
    CHECK(trih::vandermonde_identity_check(values, PowerMode::Odd));
    CHECK(trih::vandermonde_identity_check(values, PowerMode::Consecutive));
  }
  CHECK(trih::vandermonde_identity_check({}, PowerMode::Odd));
  // opposite values collapse the odd-power determinant but not the
  // consecutive one
  std::vector<Rational> pair = {Rational(1, 2), Rational(-1, 2)};
  CHECK(trih::vandermonde_det(pair, {1, 2}) != Rational(0));
  CHECK(trih::vandermonde_identity_check(pair, PowerMode::Odd));
}

TEST_CASE("mass systems: one rate, contradiction at the fourth moment") {
  auto cert = trih::solve_masses({Rational(1, 2)}, {Rational(0), Rational(-1, 2)});
  REQUIRE(cert.status == Certificate::Status::Infeasible);
  CHECK(cert.conflict_kind == Certificate::Conflict::MomentMismatch);
  CHECK(cert.violated_moment == 2);
  REQUIRE(cert.conflict.size() == 2);
  CHECK(cert.conflict[0].symbol == "moment(2)");
  CHECK(cert.conflict[0].value == Rational(0));
  CHECK(cert.conflict[1].symbol == "target(2)");
  CHECK(cert.conflict[1].value == Rational(-1, 2));
  CHECK(cert.defect == Rational(1, 2));
  CHECK(cert.verify());
}

TEST_CASE("mass systems: two opposite rates survive to the fourth moment") {
  auto cert = trih::solve_masses(
      {Rational(1), Rational(-1)},
      {Rational(0), Rational(-1), Rational(0), Rational(3, 4)});
  REQUIRE(cert.status == Certificate::Status::Infeasible);
  CHECK(cert.violated_moment == 4);
  CHECK(cert.defect == Rational(-7, 4));
  CHECK(cert.conflict[0].value == Rational(-1));
  CHECK(cert.conflict[1].value == Rational(3, 4));
  CHECK(cert.verify());
}

TEST_CASE("mass systems: consistent targets give back the masses") {
  std::mt19937 rng(1123);
  std::uniform_int_distribution<long> numd(-7, 7);
  std::uniform_int_distribution<long> dend(1, 4);
  std::uniform_int_distribution<int> kd(1, 5);
  int done = 0;
  while (done < 150) {
    int k = kd(rng);
    std::vector<Rational> rates;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      Rational r(numd(rng), dend(rng));
      if (r.is_zero()) ok = false;
      for (const auto& prev : rates)
        if (prev == r) ok = false;
      rates.push_back(r);
    }
    if (!ok) continue;
    std::vector<Rational> masses;
    for (int i = 0; i < k; ++i) masses.emplace_back(numd(rng), dend(rng));
    std::vector<Rational> targets;
    for (int q = 1; q <= k + 3; ++q) {
      Rational t(0);
      for (int i = 0; i < k; ++i) t += masses[i] * rates[i].pow(q);
      targets.push_back(t);
    }
    auto cert = trih::solve_masses(rates, targets);
    REQUIRE(cert.status == Certificate::Status::Feasible);
    CHECK(cert.masses == masses);
    CHECK(cert.verify());
    ++done;
  }
}

TEST_CASE("mass systems: input validation") {
  CHECK_THROWS_AS(trih::solve_masses({}, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(trih::solve_masses({Rational(0)}, {Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      trih::solve_masses({Rational(2), Rational(2)},
                         {Rational(1), Rational(1)}),
      std::invalid_argument);
  CHECK_THROWS_AS(trih::solve_masses({Rational(1), Rational(2)}, {Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("single-rate certificates") {
  for (const Rational& c : {Rational(-1), Rational(1), Rational(2)}) {
    auto c1 = trih::uniform_rate_certificate(c, UniformRateCase::Case1);
    REQUIRE(c1.status == Certificate::Status::Infeasible);
    CHECK(c1.conflict_kind == Certificate::Conflict::SquareVsFourth);
    CHECK(c1.defect == -(c * c) / Rational(8));
    CHECK(c1.verify());

    auto c3 = trih::uniform_rate_certificate(c, UniformRateCase::Case3);
    REQUIRE(c3.status == Certificate::Status::Infeasible);
    CHECK(c3.conflict_kind == Certificate::Conflict::SquareVsSquare);
    CHECK(c3.defect == c / Rational(12));
    CHECK(c3.verify());
  }
  auto hyper = trih::uniform_rate_certificate(Rational(-1), UniformRateCase::Case1);
  CHECK(hyper.conflict[0].value == Rational(1, 2));   // P^2
  CHECK(hyper.conflict[1].value == Rational(3, 8));   // P^4
  CHECK(hyper.defect == Rational(-1, 8));
  auto hyper3 = trih::uniform_rate_certificate(Rational(-1), UniformRateCase::Case3);
  CHECK(hyper3.defect == Rational(-1, 12));
  CHECK_THROWS_AS(trih::uniform_rate_certificate(Rational(0), UniformRateCase::Case1),
                  std::domain_error);
}

TEST_CASE("certificate json is exact and self-describing") {
  auto cert = trih::solve_masses({Rational(1, 2)}, {Rational(0), Rational(-1, 2)});
  auto j = cert.to_json();
  CHECK(j["status"] == "Infeasible");
  CHECK(j["defect"] == "1/2");
  CHECK(j["violated_moment"] == 2);
  CHECK(j["verified"] == true);
  CHECK(j["conflict"][0]["symbol"] == "moment(2)");
  CHECK(j["conflict"][1]["value"] == "-1/2");

  auto ok = trih::solve_masses({Rational(2)}, {Rational(1)});
  auto jf = ok.to_json();
  CHECK(jf["status"] == "Feasible");
  CHECK(jf["masses"][0] == "1/2");
  CHECK(!jf.contains("conflict"));
}

TEST_CASE("tampered certificates fail verification") {
  auto cert = trih::solve_masses({Rational(1, 2)}, {Rational(0), Rational(-1, 2)});
  Certificate broken = cert;
  broken.defect = Rational(1, 3);
  CHECK(!broken.verify());
  broken = cert;
  broken.conflict[0].value = Rational(1);
  CHECK(!broken.verify());
  broken = cert;
  broken.conflict.pop_back();
  CHECK(!broken.verify());
  broken = cert;
  broken.defect = Rational(0);
  CHECK(!broken.verify());
}

TEST_CASE("descent chain") { CHECK(trih::descent_chain_check()); }

TEST_CASE("descent chain breaks under a halved rate rule") {
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"A", "B", "P", "N"});
  MultiPoly A = MultiPoly::var(ring, "A");
  MultiPoly B = MultiPoly::var(ring, "B");
  MultiPoly P = MultiPoly::var(ring, "P");
  MultiPoly N = MultiPoly::var(ring, "N");
  MultiPoly zero = MultiPoly::zero(ring);
  // e1(A) = P A instead of 2 P A
  Derivation d(ring, {P * A, zero, P * P, zero});
  MultiPoly three = MultiPoly::constant(ring, Rational(3));
  MultiPoly expr =
      ((N - three) * P * P * A).scaled(Rational(2)) + (A + B) * (A + B);
  MultiPoly expected = ((N - three) * P * P * P * A).scaled(Rational(8)) +
                       ((A + B) * A * P).scaled(Rational(4));
  CHECK(!(formal_derive(expr, d) == expected));
}

TEST_CASE("rate elimination") { CHECK(trih::rate_elimination_check()); }

TEST_CASE("rate elimination breaks under a perturbed coefficient") {
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"u", "h", "p", "P"});
  MultiPoly u = MultiPoly::var(ring, "u");
  MultiPoly h = MultiPoly::var(ring, "h");
  MultiPoly p = MultiPoly::var(ring, "p");
  MultiPoly P = MultiPoly::var(ring, "P");
  MultiPoly s = u.scaled(Rational(2)) + h.scaled(Rational(25));
  MultiPoly g6 = (u * p).scaled(Rational(-12)) +
                 (h * p).scaled(Rational(-500)) + (s * s).scaled(Rational(3));
  // 250 -> 260 in the last relation of the chain
  MultiPoly g7_bad = (u * p).scaled(Rational(-12)) +
                     (h * p).scaled(Rational(-260)) +
                     (u * s).scaled(Rational(6));
  Derivation d(ring, {(u * P).scaled(Rational(2)), MultiPoly::zero(ring),
                      (p * P).scaled(Rational(2)), P * P});
  CHECK(!(formal_derive(g6, d) == P.scaled(Rational(4)) * g7_bad));

  MultiPoly lead6 = u.scaled(Rational(12)) + h.scaled(Rational(500));
  MultiPoly lead7_bad = u.scaled(Rational(12)) + h.scaled(Rational(260));
  MultiPoly num_bad = (s * s * lead7_bad).scaled(Rational(3)) -
                      (u * s * lead6).scaled(Rational(6));
  MultiPoly factor =
      (u * h).scaled(Rational(4)) - (h * h).scaled(Rational(125));
  CHECK(!num_bad.divide_exact(factor).has_value());
}

TEST_CASE("residual expansion") { CHECK(trih::residual_expansion_check()); }

TEST_CASE("second derivative of S needs its curvature term") {
  // one symbolic class is enough to see the 2 c S term appear
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"n", "mu", "P", "c"});
  MultiPoly n = MultiPoly::var(ring, "n");
  MultiPoly mu = MultiPoly::var(ring, "mu");
  MultiPoly P = MultiPoly::var(ring, "P");
  MultiPoly c = MultiPoly::var(ring, "c");
  MultiPoly zero = MultiPoly::zero(ring);
  Derivation d(ring, {zero, mu * P, P * P + c, zero});
  MultiPoly S = n * mu * mu;
  MultiPoly dd = formal_derive(formal_derive(S, d), d);
  MultiPoly full = (n * mu * mu * P * P).scaled(Rational(6)) +
                   (c * S).scaled(Rational(2));
  MultiPoly truncated = (n * mu * mu * P * P).scaled(Rational(6));
  CHECK(dd == full);
  CHECK(!(dd == truncated));
}
