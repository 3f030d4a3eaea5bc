#include "trih/moments.hpp"

#include <stdexcept>

namespace trih {

namespace {

Rational det_by_elimination(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv_p = m[col][col].inv();
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational f = m[r][col] * inv_p;
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Unique solution of a square system with nonzero determinant.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
  const std::size_t k = m.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col].is_zero()) ++piv;
    if (piv == k) throw std::logic_error("moments: singular system");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
    }
    Rational inv_p = m[col][col].inv();
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] * inv_p;
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

Rational moment_coefficient(long q, const Rational& c) {
  if (q < 0) throw std::invalid_argument("moments: q must be >= 0");
  if (q % 2 == 1) return Rational(0);
  Rational coeff(double_factorial(q - 1), double_factorial(q));
  return coeff * (-c).pow(q / 2);
}

Rational closed_form_moment(long q, const Rational& c, const Rational& nH) {
  return moment_coefficient(q, c) * nH;
}

RecurrenceReport moment_recurrence_check(long q_max, const Rational& c,
                                         const Rational& nH) {
  if (q_max < 1) throw std::invalid_argument("moments: q_max must be >= 1");
  for (long q = 1; q <= q_max; ++q) {
    Rational step = Rational(q + 1) * closed_form_moment(q + 1, c, nH) +
                    c * Rational(q) * closed_form_moment(q - 1, c, nH);
    if (!step.is_zero()) return {false, q};
  }
  return {true, -1};
}

bool moment_derivation_check(long q_max, int classes) {
  if (q_max < 1) throw std::invalid_argument("moments: q_max must be >= 1");
  if (classes < 1) throw std::invalid_argument("moments: classes must be >= 1");
  std::vector<std::string> names;
  for (int a = 1; a <= classes; ++a) {
    names.push_back("n" + std::to_string(a));
    names.push_back("mu" + std::to_string(a));
    names.push_back("P" + std::to_string(a));
  }
  names.push_back("c");
  auto ring = std::make_shared<const PolyRing>(names);

  auto var = [&](const std::string& n) { return MultiPoly::var(ring, n); };
  MultiPoly c = var("c");
  std::vector<MultiPoly> images;
  for (int a = 1; a <= classes; ++a) {
    std::string s = std::to_string(a);
    images.push_back(MultiPoly::zero(ring));             // n_a constant
    images.push_back(var("mu" + s) * var("P" + s));      // e1(mu) = mu P
    images.push_back(var("P" + s) * var("P" + s) + c);   // e1(P) = P^2 + c
  }
  images.push_back(MultiPoly::zero(ring));               // c constant
  Derivation D(ring, std::move(images));

  auto moment = [&](long q) {
    MultiPoly f = MultiPoly::zero(ring);
    for (int a = 1; a <= classes; ++a) {
      std::string s = std::to_string(a);
      f = f + var("n" + s) * var("mu" + s) *
                  var("P" + s).pow(static_cast<unsigned>(q));
    }
    return f;
  };

  for (long q = 0; q <= q_max; ++q) {
    MultiPoly lhs = formal_derive(moment(q), D);
    MultiPoly rhs = moment(q + 1).scaled(Rational(q + 1));
    if (q >= 1) rhs = rhs + (c * moment(q - 1)).scaled(Rational(q));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Rational vandermonde_det(const std::vector<Rational>& values,
                         const std::vector<long>& powers) {
  if (values.empty() || values.size() != powers.size())
    throw std::invalid_argument(
        "vandermonde: values and powers must have equal positive length");
  const std::size_t k = values.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = values[j].pow(powers[i]);
  return det_by_elimination(std::move(m));
}

bool vandermonde_identity_check(const std::vector<Rational>& values,
                                PowerMode mode) {
  const std::size_t k = values.size();
  if (k == 0) return true;
  std::vector<long> powers;
  for (std::size_t i = 1; i <= k; ++i)
    powers.push_back(mode == PowerMode::Odd ? static_cast<long>(2 * i - 1)
                                            : static_cast<long>(i));
  Rational det = vandermonde_det(values, powers);
  Rational expected(1);
  for (const Rational& v : values) expected *= v;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      if (mode == PowerMode::Odd)
        expected *= values[b] * values[b] - values[a] * values[a];
      else
        expected *= values[b] - values[a];
    }
  return det == expected;
}

bool Certificate::verify() const {
  if (status == Status::Feasible)
    return conflict_kind == Conflict::None && conflict.empty();
  if (conflict.size() != 2 || defect.is_zero()) return false;
  const Rational& a = conflict[0].value;
  const Rational& b = conflict[1].value;
  switch (conflict_kind) {
    case Conflict::MomentMismatch:
    case Conflict::SquareVsSquare:
      return defect == a - b;
    case Conflict::SquareVsFourth:
      return defect == a * a - b;
    case Conflict::None:
      return false;
  }
  return false;
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["status"] = status == Status::Feasible ? "Feasible" : "Infeasible";
  if (status == Status::Feasible) {
    auto& arr = j["masses"] = nlohmann::json::array();
    for (const auto& m : masses) arr.push_back(m.str());
    return j;
  }
  auto& arr = j["conflict"] = nlohmann::json::array();
  for (const auto& fv : conflict)
    arr.push_back({{"symbol", fv.symbol}, {"value", fv.value.str()}});
  j["defect"] = defect.str();
  if (violated_moment >= 0) j["violated_moment"] = violated_moment;
  j["verified"] = verify();
  return j;
}

Certificate solve_masses(const std::vector<Rational>& rates,
                         const std::vector<Rational>& targets) {
  const std::size_t k = rates.size();
  if (k == 0) throw std::invalid_argument("moments: no rates");
  if (targets.size() < k)
    throw std::invalid_argument("moments: need at least one target per rate");
  for (std::size_t i = 0; i < k; ++i) {
    if (rates[i].is_zero())
      throw std::invalid_argument("moments: zero rate");
    for (std::size_t j = i + 1; j < k; ++j)
      if (rates[i] == rates[j])
        throw std::invalid_argument("moments: repeated rate " + rates[i].str());
  }
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t q = 1; q <= k; ++q) {
    for (std::size_t j = 0; j < k; ++j)
      m[q - 1][j] = rates[j].pow(static_cast<long>(q));
    rhs[q - 1] = targets[q - 1];
  }
  std::vector<Rational> masses = solve_linear(std::move(m), std::move(rhs));

  for (std::size_t q = k + 1; q <= targets.size(); ++q) {
    Rational predicted(0);
    for (std::size_t j = 0; j < k; ++j)
      predicted += masses[j] * rates[j].pow(static_cast<long>(q));
    const Rational& target = targets[q - 1];
    if (predicted != target) {
      Certificate cert;
      cert.status = Certificate::Status::Infeasible;
      cert.conflict_kind = Certificate::Conflict::MomentMismatch;
      std::string qs = std::to_string(q);
      cert.conflict = {{"moment(" + qs + ")", predicted},
                       {"target(" + qs + ")", target}};
      cert.defect = predicted - target;
      cert.violated_moment = static_cast<long>(q);
      return cert;
    }
  }
  Certificate cert;
  cert.status = Certificate::Status::Feasible;
  cert.masses = std::move(masses);
  return cert;
}

Certificate uniform_rate_certificate(const Rational& c, UniformRateCase v) {
  if (c.is_zero())
    throw std::domain_error("moments: c = 0 has no uniform-rate certificate");
  Certificate cert;
  cert.status = Certificate::Status::Infeasible;
  if (v == UniformRateCase::Case1) {
    Rational p2 = -c / Rational(2);
    Rational p4 = Rational(3, 8) * c * c;
    cert.conflict_kind = Certificate::Conflict::SquareVsFourth;
    cert.conflict = {{"P^2", p2}, {"P^4", p4}};
    cert.defect = p2 * p2 - p4;  // -c^2/8
  } else {
    Rational a = Rational(-3, 4) * c;
    Rational b = Rational(-5, 6) * c;
    cert.conflict_kind = Certificate::Conflict::SquareVsSquare;
    cert.conflict = {{"P^2", a}, {"P^2", b}};
    cert.defect = a - b;  // c/12
  }
  return cert;
}

bool descent_chain_check() {
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"A", "B", "P", "N"});
  MultiPoly A = MultiPoly::var(ring, "A");
  MultiPoly B = MultiPoly::var(ring, "B");
  MultiPoly P = MultiPoly::var(ring, "P");
  MultiPoly N = MultiPoly::var(ring, "N");
  MultiPoly zero = MultiPoly::zero(ring);
  Derivation D(ring, {(P * A).scaled(Rational(2)),  // e1(A) = 2 P A
                      zero,                         // e1(B) = 0
                      P * P,                        // e1(P) = P^2
                      zero});                       // N constant

  MultiPoly three = MultiPoly::constant(ring, Rational(3));
  MultiPoly expr =
      ((N - three) * P * P * A).scaled(Rational(2)) + (A + B) * (A + B);

  MultiPoly derived = formal_derive(expr, D);
  MultiPoly expected =
      ((N - three) * P * P * P * A).scaled(Rational(8)) +
      ((A + B) * A * P).scaled(Rational(4));
  if (!(derived == expected)) return false;

  auto quot = derived.divide_exact(P.scaled(Rational(4)));
  if (!quot) return false;
  return *quot - expr == -(A + B) * B;
}

bool rate_elimination_check() {
  auto ring = std::make_shared<const PolyRing>(
      std::vector<std::string>{"u", "h", "p", "P"});
  MultiPoly u = MultiPoly::var(ring, "u");
  MultiPoly h = MultiPoly::var(ring, "h");
  MultiPoly p = MultiPoly::var(ring, "p");
  MultiPoly P = MultiPoly::var(ring, "P");

  MultiPoly s = u.scaled(Rational(2)) + h.scaled(Rational(25));  // 2u + 25h
  MultiPoly g5 = (u * u * p).scaled(Rational(32)) -
                 (u * p * s).scaled(Rational(20)) + s * s * s;
  MultiPoly g4 = (u * u * p * s).scaled(Rational(32)) -
                 (u * p * s * s).scaled(Rational(20)) + s * s * s * s;
  MultiPoly g6 =
      (u * p).scaled(Rational(-12)) + (h * p).scaled(Rational(-500)) +
      (s * s).scaled(Rational(3));
  MultiPoly g7 =
      (u * p).scaled(Rational(-12)) + (h * p).scaled(Rational(-250)) +
      (u * s).scaled(Rational(6));

  // collapsing the common factor behind the shared root structure
  if (!(g4 == s * g5)) return false;

  // eliminating p between g6 and g7 leaves 50 h (4u - 125h)
  MultiPoly lead6 = u.scaled(Rational(12)) + h.scaled(Rational(500));
  MultiPoly lead7 = u.scaled(Rational(12)) + h.scaled(Rational(250));
  MultiPoly cross = u.scaled(Rational(2)) * lead6 - s * lead7;
  MultiPoly target = (h * (u.scaled(Rational(4)) - h.scaled(Rational(125))))
                         .scaled(Rational(50));
  if (!(cross == target)) return false;

  // solving each of g6, g7 for p and subtracting: the numerator carries
  // the factor 4uh - 125h^2
  MultiPoly num = (s * s * lead7).scaled(Rational(3)) -
                  (u * s * lead6).scaled(Rational(6));
  MultiPoly factor = (u * h).scaled(Rational(4)) - (h * h).scaled(Rational(125));
  if (!num.divide_exact(factor)) return false;

  // derivation replay: with e1(u) = 2uP, e1(p) = 2pP, e1(P) = P^2 the
  // chain g5 -> g6 -> g7 is reproduced without leaving the ring
  Derivation D(ring, {(u * P).scaled(Rational(2)), MultiPoly::zero(ring),
                      (p * P).scaled(Rational(2)), P * P});
  if (!(formal_derive(g5, D) == (u * P).scaled(Rational(4)) * g6)) return false;
  if (!(formal_derive(g6, D) == P.scaled(Rational(4)) * g7)) return false;

  // consistency of the forced root: u = 125h/4 solves g6 with a positive
  // rate square p = 105h/4, and that pair satisfies g7 identically
  MultiPoly u_root = h.scaled(Rational(125, 4));
  MultiPoly g6_sub = g6.substitute(ring->index_of("u"), u_root);
  MultiPoly b = g6_sub.substitute(ring->index_of("p"), MultiPoly::zero(ring));
  auto a = (g6_sub - b).divide_exact(p);
  if (!a) return false;
  auto p_solved = (-b).divide_exact(*a);
  if (!p_solved) return false;
  if (!(*p_solved == h.scaled(Rational(105, 4)))) return false;
  MultiPoly g7_sub = g7.substitute(ring->index_of("u"), u_root)
                         .substitute(ring->index_of("p"), *p_solved);
  return g7_sub.is_zero();
}

bool residual_expansion_check() {
  auto ring = std::make_shared<const PolyRing>(std::vector<std::string>{
      "mu1", "mu2", "mu3", "P1", "P2", "P3", "n2", "n3", "c", "Gamma"});
  auto var = [&](const std::string& n) { return MultiPoly::var(ring, n); };
  MultiPoly one = MultiPoly::constant(ring, Rational(1));
  MultiPoly c = var("c");
  MultiPoly gamma = var("Gamma");

  // three classes; the first is the direction of differentiation itself
  // and has multiplicity 1
  std::vector<MultiPoly> mu = {var("mu1"), var("mu2"), var("mu3")};
  std::vector<MultiPoly> P = {var("P1"), var("P2"), var("P3")};
  std::vector<MultiPoly> n = {one, var("n2"), var("n3")};

  std::vector<MultiPoly> images(ring->arity(), MultiPoly::zero(ring));
  for (int i = 0; i < 3; ++i) {
    images[ring->index_of("mu" + std::to_string(i + 1))] = mu[i] * P[i];
    images[ring->index_of("P" + std::to_string(i + 1))] = P[i] * P[i] + c;
  }
  Derivation D(ring, std::move(images));

  auto sum3 = [&](auto f) {
    MultiPoly acc = MultiPoly::zero(ring);
    for (int i = 0; i < 3; ++i) acc = acc + f(i);
    return acc;
  };
  MultiPoly S = sum3([&](int i) { return n[i] * mu[i] * mu[i]; });
  MultiPoly M1 = sum3([&](int i) { return n[i] * mu[i]; });
  MultiPoly Psum = sum3([&](int i) { return n[i] * P[i]; });
  MultiPoly ntot = one + var("n2") + var("n3");

  MultiPoly e1S = formal_derive(S, D);
  MultiPoly e1S_display =
      sum3([&](int i) { return n[i] * mu[i] * mu[i] * P[i]; })
          .scaled(Rational(2));
  if (!(e1S == e1S_display)) return false;

  MultiPoly e1e1S = formal_derive(e1S, D);
  MultiPoly e1e1S_display =
      sum3([&](int i) { return n[i] * mu[i] * mu[i] * P[i] * P[i]; })
          .scaled(Rational(6)) +
      (c * S).scaled(Rational(2));
  if (!(e1e1S == e1e1S_display)) return false;

  // residual assembled from the derivation output...
  MultiPoly assembled =
      -e1e1S + e1S * (Psum + gamma) + S * S - ntot * c * S - c * M1 * M1;
  // ...against the expanded spectral display
  MultiPoly display =
      sum3([&](int i) { return n[i] * mu[i] * mu[i] * P[i] * P[i]; })
          .scaled(Rational(-6)) +
      sum3([&](int i) { return n[i] * mu[i] * mu[i] * P[i]; })
              .scaled(Rational(2)) *
          (Psum + gamma) +
      S * S - (ntot + one + one) * c * S - c * M1 * M1;
  if (!(assembled == display)) return false;

  // and once more with the connection symbol switched off
  std::size_t gi = ring->index_of("Gamma");
  MultiPoly zero = MultiPoly::zero(ring);
  return assembled.substitute(gi, zero) == display.substitute(gi, zero);
}

}  // namespace trih
