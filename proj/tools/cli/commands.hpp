#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace quasitoric::cli {

enum ExitCode : int { ok = 0, domain_error = 1, parse_error = 2, consistency_error = 3 };

struct Report {
  Json document;
  std::vector<std::string> failures;          // "module: what went wrong"
  std::map<std::string, std::string> figures;  // file name -> SVG text
};

// The full pipeline for F_a. Never throws on a failed cross-check; the
// failures are collected instead.
Report build_report(const ParamSpec& a, double tol);
std::string render_text(const Json& report);

Json cmd_normal_fan(const Json& in);
Json cmd_gale_dual(const Json& in);
Json cmd_cut(const Json& in);
Json cmd_blowup(const Json& in);
Json cmd_classify_leaves(const ParamSpec& a);

// Default tolerance, overridden by QUASITORIC_TOL.
double default_tolerance();

// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quasitoric::cli
