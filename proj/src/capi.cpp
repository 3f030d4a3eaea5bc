#include "trihcheck.h"

#include "trih/report.hpp"

#include <stdexcept>
#include <string>

struct trih_report {
  std::string output;
  int exit_code;
};

namespace {

thread_local std::string g_last_error;

trih::ParamMap parse_params(const char* const* params, size_t num_params) {
  trih::ParamMap map;
  for (size_t i = 0; i < num_params; ++i) {
    if (!params[i]) throw std::invalid_argument("null parameter string");
    std::string s = params[i];
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("parameter must be key=value (got '" + s +
                                  "')");
    std::string key = s.substr(0, eq);
    if (map.count(key))
      throw std::invalid_argument("duplicate parameter '" + key + "'");
    map.emplace(std::move(key), trih::Rational::parse(s.substr(eq + 1)));
  }
  return map;
}

std::string require(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string("missing ") + what);
  return s;
}

trih_status deliver(trih::RunReport&& rep, trih_report** out) {
  if (!out) throw std::invalid_argument("missing output pointer");
  *out = new trih_report{std::move(rep.output), rep.exit_code};
  g_last_error.clear();
  return rep.exit_code == 0 ? TRIH_OK : TRIH_CHECK_FAILED;
}

template <typename Fn>
trih_status guarded(trih_report** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TRIH_USAGE_ERROR;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return TRIH_USAGE_ERROR;
  } catch (const std::exception& e) {
    // anything else means a mathematical claim did not survive contact
    // with the implementation; it is a failed check, not a usage problem
    g_last_error = e.what();
    return TRIH_CHECK_FAILED;
  }
}

}  // namespace

extern "C" {

trih_status trih_run_check(const char* curvature, int n, const char* family,
                           const char* const* params, size_t num_params,
                           const char* expect, const char* format,
                           trih_report** out) {
  return guarded(out, [&] {
    trih::CheckArgs args;
    args.n = n;
    args.curvature = trih::Rational::parse(require(curvature, "curvature"));
    args.family = require(family, "family");
    args.params = parse_params(params, num_params);
    if (expect) args.expect = std::string(expect);
    if (format) args.format = format;
    return deliver(trih::run_check(args), out);
  });
}

trih_status trih_run_corollary(int n, int digits, const char* format,
                               trih_report** out) {
  return guarded(out, [&] {
    trih::CorollaryArgs args;
    args.n = n;
    args.digits = digits;
    if (format) args.format = format;
    return deliver(trih::run_corollary(args), out);
  });
}

trih_status trih_run_identities(const char* suite, long qmax, long cases,
                                const char* format, trih_report** out) {
  return guarded(out, [&] {
    trih::IdentitiesArgs args;
    if (suite) args.suite = suite;
    if (qmax != 0) args.qmax = qmax;
    if (cases != 0) args.cases = cases;
    if (format) args.format = format;
    return deliver(trih::run_identities(args), out);
  });
}

trih_status trih_run_scan(const char* curvature, int n, const char* family,
                          const char* const* params, size_t num_params,
                          const char* range, const char* out_format,
                          trih_report** out) {
  return guarded(out, [&] {
    trih::ScanArgs args;
    args.n = n;
    args.curvature = trih::Rational::parse(require(curvature, "curvature"));
    args.family = require(family, "family");
    args.fixed = parse_params(params, num_params);
    if (out_format) args.out = out_format;

    std::string spec = require(range, "range");
    auto eq = spec.find('=');
    auto c1 = spec.find(':', eq == std::string::npos ? 0 : eq + 1);
    auto c2 = c1 == std::string::npos ? std::string::npos
                                      : spec.find(':', c1 + 1);
    if (eq == std::string::npos || eq == 0 || c1 == std::string::npos ||
        c2 == std::string::npos)
      throw std::invalid_argument("range must be key=lo:hi:steps (got '" +
                                  spec + "')");
    args.range_key = spec.substr(0, eq);
    args.lo = trih::Rational::parse_decimal(spec.substr(eq + 1, c1 - eq - 1));
    args.hi = trih::Rational::parse_decimal(spec.substr(c1 + 1, c2 - c1 - 1));
    std::string steps = spec.substr(c2 + 1);
    std::size_t used = 0;
    long parsed = 0;
    try {
      parsed = std::stol(steps, &used);
    } catch (...) {
      throw std::invalid_argument("steps must be an integer (got '" + steps +
                                  "')");
    }
    if (used != steps.size())
      throw std::invalid_argument("steps must be an integer (got '" + steps +
                                  "')");
    args.steps = parsed;
    return deliver(trih::run_scan(args), out);
  });
}

int trih_report_exit_code(const trih_report* report) {
  return report ? report->exit_code : TRIH_USAGE_ERROR;
}

const char* trih_report_output(const trih_report* report) {
  return report ? report->output.c_str() : "";
}

void trih_report_free(trih_report* report) { delete report; }

const char* trih_last_error(void) { return g_last_error.c_str(); }

const char* trih_version(void) { return trih::kVersion; }

}  // extern "C"
