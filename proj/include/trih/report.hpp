// Command implementations behind the CLI: build a catalog instance and
// classify it, run the corollary checks, replay the identity suites, sweep
// a parameter range. Each returns a RunReport carrying the rendered output
// and the process exit code (0 pass, 1 a mathematical check failed,
// 2 usage). Reports are deterministic: same arguments, same bytes, except
// the timing_ms field.
#pragma once

#include "trih/catalog.hpp"
#include "trih/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace trih {

inline constexpr char kVersion[] = "0.1.0";

struct RunReport {
  int exit_code = 0;
  std::string output;    // rendered as requested (json / text / csv)
  nlohmann::json body;   // structured form, empty for csv
};

struct CheckArgs {
  int n = 0;
  Rational curvature;
  std::string family;
  ParamMap params;
  std::optional<std::string> expect;  // "proper" | "minimal" | "not"
  std::string format = "json";        // "json" | "text"
};

struct CorollaryArgs {
  int n = 0;
  int digits = 40;
  std::string format = "json";
};

struct IdentitiesArgs {
  std::string suite = "all";  // lemma3|lemma4|vandermonde|theorem3|r6|all
  long qmax = 15;
  long cases = 1000;
  std::string format = "json";
};

struct ScanArgs {
  int n = 0;
  Rational curvature;
  std::string family;
  ParamMap fixed;        // parameters held constant
  std::string range_key; // the swept parameter
  Rational lo, hi;
  long steps = 0;        // >= 2, endpoints included
  std::string out = "csv";  // "csv" | "json"
};

RunReport run_check(const CheckArgs& args);
RunReport run_corollary(const CorollaryArgs& args);
RunReport run_identities(const IdentitiesArgs& args);
RunReport run_scan(const ScanArgs& args);

}  // namespace trih
