// Command-line front end. All real work happens behind the C API; this
// file only parses flags, forwards strings, and prints what comes back.
#include <trihcheck.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::vector<const char*> as_cstrs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

// Prints the report (to stdout or a file) and converts the run into a
// process exit code: 0 pass, 1 failed check, 2 usage.
int conclude(trih_status status, trih_report* report,
             const std::string& output_path) {
  if (!report) {
    std::fprintf(stderr, "error: %s\n", trih_last_error());
    return status == TRIH_USAGE_ERROR ? 2 : 1;
  }
  int code = trih_report_exit_code(report);
  const char* text = trih_report_output(report);
  if (output_path.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream f(output_path, std::ios::binary);
    f << text;
    if (!f) {
      std::fprintf(stderr, "error: cannot write %s\n", output_path.c_str());
      code = 2;
    }
  }
  trih_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triharmonic hypersurface checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", trih_version());

  std::string curvature, family, expect, format = "json";
  std::string range, out_format = "csv", output_path, suite = "all";
  std::vector<std::string> params;
  int n = 0, digits = 40;
  long qmax = 15, cases = 1000;

  auto* check = app.add_subcommand(
      "check", "Classify one catalog hypersurface");
  check->add_option("--curvature", curvature, "Ambient curvature")
      ->required()
      ->check(CLI::IsMember({"-1", "0", "1"}));
  check->add_option("--n", n, "Hypersurface dimension")->required();
  check->add_option("--family", family, "Catalog family name")->required();
  check->add_option("--param", params,
                    "Family parameter key=value (exact rational)");
  check->add_option("--expect", expect, "Expected verdict")
      ->check(CLI::IsMember({"proper", "minimal", "not"}));
  check->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* corollary = app.add_subcommand(
      "corollary", "Torus root isolation, crosscheck and elimination");
  corollary->add_option("--n", n, "Hypersurface dimension")->required();
  corollary->add_option("--digits", digits, "Working precision");
  corollary->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* identities = app.add_subcommand(
      "identities", "Replay the formal identity suites");
  identities->add_option("--suite", suite, "Which suite to run")
      ->check(CLI::IsMember(
          {"lemma3", "lemma4", "vandermonde", "theorem3", "r6", "all"}));
  identities->add_option("--qmax", qmax, "Formal moment range");
  identities->add_option("--cases", cases, "Randomized case count");
  identities->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* scan = app.add_subcommand(
      "scan", "Sweep one family parameter and tabulate the invariants");
  scan->add_option("--curvature", curvature, "Ambient curvature")
      ->required()
      ->check(CLI::IsMember({"-1", "0", "1"}));
  scan->add_option("--n", n, "Hypersurface dimension")->required();
  scan->add_option("--family", family, "Catalog family name")->required();
  scan->add_option("--param", params, "Fixed parameter key=value");
  scan->add_option("--param-range", range, "Swept parameter key=lo:hi:steps")
      ->required();
  scan->add_option("--out", out_format, "Row format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--output", output_path, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto cparams = as_cstrs(params);
  trih_report* report = nullptr;
  trih_status status = TRIH_USAGE_ERROR;

  if (check->parsed()) {
    status = trih_run_check(curvature.c_str(), n, family.c_str(),
                            cparams.data(), cparams.size(),
                            expect.empty() ? nullptr : expect.c_str(),
                            format.c_str(), &report);
  } else if (corollary->parsed()) {
    status = trih_run_corollary(n, digits, format.c_str(), &report);
  } else if (identities->parsed()) {
    status = trih_run_identities(suite.c_str(), qmax, cases, format.c_str(),
                                 &report);
  } else if (scan->parsed()) {
    status = trih_run_scan(curvature.c_str(), n, family.c_str(),
                           cparams.data(), cparams.size(), range.c_str(),
                           out_format.c_str(), &report);
  }

  return conclude(status, report, scan->parsed() ? output_path : "");
}
