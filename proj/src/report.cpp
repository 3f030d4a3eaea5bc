#include "trih/report.hpp"

#include "trih/conditions.hpp"
#include "trih/corollary.hpp"
#include "trih/moments.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace trih {

namespace {

using nlohmann::json;

class Timer {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct CheckList {
  json entries = json::array();
  bool all_pass = true;

  void add(const std::string& name, bool pass) {
    entries.push_back({{"name", name}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
};

json bigfloat_json(const BigFloat& x, int digits) {
  return {{"decimal", x.to_decimal(digits)}, {"digits", digits}};
}

Verdict parse_expect(const std::string& s) {
  if (s == "proper") return Verdict::ProperTriharmonic;
  if (s == "minimal") return Verdict::Minimal;
  if (s == "not") return Verdict::NotTriharmonic;
  throw std::invalid_argument("expect must be proper, minimal or not (got '" +
                              s + "')");
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family '" + name + "'");
  return *f;
}

std::string render_text(const json& body) {
  std::ostringstream os;
  for (const auto& [key, value] : body.items()) {
    if (key == "timing_ms") continue;
    if (key == "checks") {
      for (const auto& c : value)
        os << "check " << c["name"].get<std::string>() << ": "
           << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      continue;
    }
    if (value.is_string())
      os << key << ": " << value.get<std::string>() << "\n";
    else
      os << key << ": " << value.dump() << "\n";
  }
  return os.str();
}

RunReport finish(json body, const std::string& format, bool all_pass,
                 const Timer& timer) {
  if (format != "json" && format != "text")
    throw std::invalid_argument("format must be json or text");
  RunReport rep;
  rep.exit_code = all_pass ? 0 : 1;
  body["timing_ms"] = timer.ms();
  rep.output = format == "json" ? body.dump(2) + "\n" : render_text(body);
  rep.body = std::move(body);
  return rep;
}

}  // namespace

RunReport run_check(const CheckArgs& args) {
  Timer timer;
  std::optional<Verdict> expected;
  if (args.expect) expected = parse_expect(*args.expect);

  SpaceForm sf(args.n, args.curvature);
  Family family = parse_family(args.family);
  CurvatureSpectrum spectrum = build_spectrum(sf, family, args.params);
  TriharmonicReport result = classify(sf, spectrum);

  json body;
  body["command"] = "check";
  body["space"] = {{"n", args.n}, {"curvature", args.curvature.str()}};
  body["family"] = args.family;
  json params = json::object();
  for (const auto& [k, v] : args.params) params[k] = v.str();
  body["params"] = std::move(params);
  json spec = json::array();
  for (const auto& e : spectrum.entries())
    spec.push_back(
        {{"value", e.value.str()}, {"multiplicity", e.multiplicity}});
  body["spectrum"] = std::move(spec);
  body["invariants"] = {{"nH", result.invariants.nH.str()},
                        {"H2", result.invariants.H2.str()},
                        {"S", result.invariants.S.str()},
                        {"R", result.invariants.R.str()}};
  body["residual"] = result.residual.str();
  body["verdict"] = verdict_name(result.verdict);
  body["version"] = kVersion;

  CheckList checks;
  checks.add("gauss_consistency",
             gauss_scalar_defect(sf, spectrum).is_zero());
  checks.add("tangential_condition", result.tangential_ok);
  if (expected)
    checks.add("expected_verdict", result.verdict == *expected);
  body["checks"] = checks.entries;
  return finish(std::move(body), args.format, checks.all_pass, timer);
}

RunReport run_corollary(const CorollaryArgs& args) {
  Timer timer;
  CorollaryResult res = corollary_crosscheck(args.n, args.digits);
  ResultantReport elim = torus_residual_resultant(args.n);

  json body;
  body["command"] = "corollary";
  body["n"] = args.n;
  body["digits"] = args.digits;
  body["t0"] = {{"decimal", res.t0.value.to_decimal(args.digits)},
                {"digits", args.digits},
                {"bracket",
                 {res.t0.bracket_lo.str(), res.t0.bracket_hi.str()}},
                {"exact", res.t0.exact}};
  body["a2"] = bigfloat_json(res.a2, args.digits);
  body["h2_defect"] = bigfloat_json(res.h2_defect, args.digits);
  body["residual"] = bigfloat_json(res.residual, args.digits);
  body["tolerance"] = res.tolerance.to_decimal(args.digits);
  body["resultant"] = {{"polynomial", elim.resultant.str("h")},
                       {"divisible", elim.divisible},
                       {"cofactor",
                        elim.divisible ? elim.cofactor.str("h") : "-"}};
  body["version"] = kVersion;

  CheckList checks;
  checks.add("sturm_unique_root", res.sturm_unique);
  checks.add("torus_h2_matches_t0", res.h2_ok);
  checks.add("torus_residual_vanishes", res.residual_ok);
  checks.add("resultant_divisible_by_cubic", elim.divisible);
  body["checks"] = checks.entries;
  return finish(std::move(body), args.format, checks.all_pass, timer);
}

namespace {

void run_lemma3_suite(CheckList& checks, long qmax) {
  for (const Rational& c : {Rational(1), Rational(-1), Rational(1, 2)}) {
    auto rep = moment_recurrence_check(qmax, c, Rational(1));
    checks.add("moment_recurrence(c=" + c.str() + ")", rep.ok);
  }
  checks.add("moment_derivation", moment_derivation_check(qmax, 3));
}

void run_vandermonde_suite(CheckList& checks, long cases) {
  std::mt19937 rng(60251);  // fixed: reports must be deterministic
  std::uniform_int_distribution<int> kd(1, 6);
  std::uniform_int_distribution<long> numd(-9, 9);
  std::uniform_int_distribution<long> dend(1, 5);
  bool factorizations = true;
  for (long it = 0; it < cases; ++it) {
    int k = kd(rng);
    std::vector<Rational> values;
    for (int i = 0; i < k; ++i) values.emplace_back(numd(rng), dend(rng));
    factorizations = factorizations &&
                     vandermonde_identity_check(values, PowerMode::Odd) &&
                     vandermonde_identity_check(values, PowerMode::Consecutive);
  }
  checks.add("vandermonde_factorizations", factorizations);

  auto single = solve_masses({Rational(1, 2)}, {Rational(0), Rational(-1, 2)});
  checks.add("single_rate_infeasible",
             single.status == Certificate::Status::Infeasible &&
                 single.violated_moment == 2 && single.verify());
  auto opposite = solve_masses(
      {Rational(1), Rational(-1)},
      {Rational(0), Rational(-1), Rational(0), Rational(3, 4)});
  checks.add("opposite_rates_infeasible",
             opposite.status == Certificate::Status::Infeasible &&
                 opposite.violated_moment == 4 && opposite.verify());

  for (const Rational& c : {Rational(1), Rational(-1)}) {
    auto c1 = uniform_rate_certificate(c, UniformRateCase::Case1);
    auto c3 = uniform_rate_certificate(c, UniformRateCase::Case3);
    checks.add("uniform_rate_conflicts(c=" + c.str() + ")",
               c1.verify() && c3.verify());
  }
}

}  // namespace

RunReport run_identities(const IdentitiesArgs& args) {
  Timer timer;
  if (args.qmax < 1) throw std::invalid_argument("qmax must be >= 1");
  if (args.cases < 1) throw std::invalid_argument("cases must be >= 1");

  const std::string& suite = args.suite;
  bool all = suite == "all";
  if (!all && suite != "lemma3" && suite != "lemma4" &&
      suite != "vandermonde" && suite != "theorem3" && suite != "r6")
    throw std::invalid_argument(
        "suite must be lemma3, lemma4, vandermonde, theorem3, r6 or all");

  CheckList checks;
  if (all || suite == "lemma3") run_lemma3_suite(checks, args.qmax);
  if (all || suite == "lemma4")
    checks.add("residual_expansion", residual_expansion_check());
  if (all || suite == "vandermonde") run_vandermonde_suite(checks, args.cases);
  if (all || suite == "theorem3")
    checks.add("descent_chain", descent_chain_check());
  if (all || suite == "r6")
    checks.add("rate_elimination", rate_elimination_check());

  json body;
  body["command"] = "identities";
  body["suite"] = suite;
  body["qmax"] = args.qmax;
  body["cases"] = args.cases;
  body["checks"] = checks.entries;
  body["version"] = kVersion;
  return finish(std::move(body), args.format, checks.all_pass, timer);
}

RunReport run_scan(const ScanArgs& args) {
  Timer timer;
  if (args.steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!(args.lo < args.hi))
    throw std::invalid_argument("range must have lo < hi");
  if (args.out != "csv" && args.out != "json")
    throw std::invalid_argument("out must be csv or json");

  SpaceForm sf(args.n, args.curvature);
  Family family = parse_family(args.family);

  struct Row {
    Rational param;
    TriharmonicReport result;
  };
  std::vector<Row> rows;
  Rational span = args.hi - args.lo;
  for (long k = 0; k < args.steps; ++k) {
    Rational value =
        args.lo + span * Rational(k) / Rational(args.steps - 1);
    ParamMap params = args.fixed;
    params[args.range_key] = value;
    CurvatureSpectrum spectrum = build_spectrum(sf, family, params);
    rows.push_back({value, classify(sf, spectrum)});
  }

  RunReport rep;
  rep.exit_code = 0;
  if (args.out == "csv") {
    std::ostringstream os;
    os << "param,H2,S,R,residual,verdict\n";
    for (const auto& row : rows)
      os << row.param.str() << ',' << row.result.invariants.H2.str() << ','
         << row.result.invariants.S.str() << ','
         << row.result.invariants.R.str() << ',' << row.result.residual.str()
         << ',' << verdict_name(row.result.verdict) << "\n";
    rep.output = os.str();
    return rep;
  }

  json body;
  body["command"] = "scan";
  body["space"] = {{"n", args.n}, {"curvature", args.curvature.str()}};
  body["family"] = args.family;
  json fixed = json::object();
  for (const auto& [k, v] : args.fixed) fixed[k] = v.str();
  body["params"] = std::move(fixed);
  body["range"] = {{"key", args.range_key},
                   {"lo", args.lo.str()},
                   {"hi", args.hi.str()},
                   {"steps", args.steps}};
  json jrows = json::array();
  for (const auto& row : rows)
    jrows.push_back({{"param", row.param.str()},
                     {"H2", row.result.invariants.H2.str()},
                     {"S", row.result.invariants.S.str()},
                     {"R", row.result.invariants.R.str()},
                     {"residual", row.result.residual.str()},
                     {"verdict", verdict_name(row.result.verdict)}});
  body["rows"] = std::move(jrows);
  body["version"] = kVersion;
  body["timing_ms"] = timer.ms();
  rep.output = body.dump(2) + "\n";
  rep.body = std::move(body);
  return rep;
}

}  // namespace trih
