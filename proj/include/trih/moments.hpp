// Weighted power sums ("moments") of curvature derivative rates, their
// closed forms, and the exact linear-algebra and derivation identities the
// classification argument rests on. Everything here is exact; the formal
// checks run in multivariate polynomial rings, the numeric ones on
// rationals.
//
// The central quantity is f(q) = sum over classes of n_a mu_a P_a^q. Under
// the derivation e1(mu) = mu P, e1(P) = P^2 + c these satisfy
//   e1(f(q)) = (1 + q) f(q+1) + c q f(q-1),
// which pins every f(q) to the closed form
//   f(q) = 0 for odd q, f(q) = ((q-1)!!/q!!) (-c)^(q/2) f(0) for even q.
#pragma once

#include "trih/multipoly.hpp"
#include "trih/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace trih {

// Closed-form coefficient f(q)/f(0); zero for odd q.
Rational moment_coefficient(long q, const Rational& c);

// f(q) itself for a given f(0) = nH.
Rational closed_form_moment(long q, const Rational& c, const Rational& nH);

struct RecurrenceReport {
  bool ok;
  long first_violation;  // smallest q with a broken step, -1 when ok
};

// Checks (q+1) f(q+1) + c q f(q-1) = 0 for q = 1..q_max on the closed
// forms. The relation is linear in nH, so one nonzero nH decides it.
RecurrenceReport moment_recurrence_check(long q_max, const Rational& c,
                                         const Rational& nH);

// Formal version: in a ring with `classes` symbolic triples (n_a, mu_a,
// P_a) plus c, verifies e1(f(q)) = (1+q) f(q+1) + c q f(q-1) for
// q = 0..q_max as polynomial identities.
bool moment_derivation_check(long q_max, int classes = 3);

// Determinant of M[i][j] = values[j]^powers[i] (square, exact).
Rational vandermonde_det(const std::vector<Rational>& values,
                         const std::vector<long>& powers);

enum class PowerMode { Odd, Consecutive };

// Odd mode: powers (1, 3, ..., 2k-1); the determinant factors as
// (prod values) * prod_{a<b} (values_b^2 - values_a^2).
// Consecutive mode: powers (1, ..., k); factorization
// (prod values) * prod_{a<b} (values_b - values_a).
bool vandermonde_identity_check(const std::vector<Rational>& values,
                                PowerMode mode);

struct ForcedValue {
  std::string symbol;  // e.g. "P^2" or "moment(4)"
  Rational value;
};

// Exact feasibility certificate for a moment system. Feasible certificates
// carry the solved masses; infeasible ones carry the two forced values
// whose clash proves infeasibility, together with the exact defect.
struct Certificate {
  enum class Status { Feasible, Infeasible };
  enum class Conflict {
    None,             // feasible
    MomentMismatch,   // predicted moment vs target at violated_moment
    SquareVsFourth,   // forced P^2 inconsistent with forced P^4
    SquareVsSquare,   // two different values forced for P^2
  };

  Status status = Status::Feasible;
  Conflict conflict_kind = Conflict::None;
  std::vector<Rational> masses;      // feasible witness
  std::vector<ForcedValue> conflict; // infeasible witness pair
  Rational defect;                   // exact contradiction size, nonzero
  long violated_moment = -1;         // moment index for MomentMismatch

  // Re-derives the contradiction from the stored witness pair.
  bool verify() const;
  nlohmann::json to_json() const;
};

// Solves the square Vandermonde system mass_a * rates_a^q = targets[q-1]
// for q = 1..|rates|, then checks the remaining targets. Rates must be
// pairwise distinct and nonzero; |targets| >= |rates|.
Certificate solve_masses(const std::vector<Rational>& rates,
                         const std::vector<Rational>& targets);

// The two single-rate scenarios whose moment systems are exactly
// infeasible for every c != 0. Case1 pits the forced P^2 = -c/2 against
// the forced P^4 = 3c^2/8 (defect -c^2/8); Case3 forces P^2 to be both
// -3c/4 and -5c/6 (defect c/12).
enum class UniformRateCase { Case1, Case3 };

Certificate uniform_rate_certificate(const Rational& c, UniformRateCase v);

// Formal descent chain in the ring {A, B, P, N} with e1(A) = 2 P A,
// e1(B) = 0, e1(P) = P^2: differentiating 2 (N-3) P^2 A + (A+B)^2 and
// dividing by 4 P returns the original expression shifted by -(A+B) B,
// which is the step that forces B = 0 in the minimal branch.
bool descent_chain_check();

// Exact elimination in the ring {u, h, p}: the pair of quadric relations
//   G6 = -12 u p - 500 h p + 3 (2u + 25h)^2
//   G7 = -12 u p - 250 h p + 6 u (2u + 25h)
// forces 50 h (4u - 125h) = 0, and the derivation replay with a rate
// symbol P confirms the chain G5 -> G6 -> G7 without leaving the ring.
bool rate_elimination_check();

// Formal check that the triharmonic residual, rewritten through the
// derivation identities for e1(S) and e1(e1(S)), matches its expanded
// spectral display (three symbolic classes, the first of multiplicity 1,
// connection term kept as one aggregate symbol).
bool residual_expansion_check();

}  // namespace trih
