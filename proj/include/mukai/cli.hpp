#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mukai/report.hpp"

namespace mukai::cli {

using report::VerificationReport;

/// Runs the command line (without the program name). Returns the exit status:
/// 0 when every check passes, 1 when some check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Suites behind the subcommands, exposed for tests.

/// Tangent classes of Gr(2,n); n = 6 is compared with the reference triangle.
VerificationReport grassmannian_report(int n);
/// χ of a smooth section of Gr(2,n) by k hyperplanes; (6,4) is compared with 12.
VerificationReport euler_report(int n, int sections);
/// Chern classes and invariants of X₁₄.
VerificationReport x14_report();

/// `cubic` subcommand suites. `check` is empty for "every applicable check".
/// Throws std::invalid_argument for unknown cases or inapplicable checks.
std::vector<VerificationReport> cubic_reports(const std::string& cubic_case, const std::string& check);

/// Everything, sorted by case id.
std::vector<VerificationReport> all_reports();

}  // namespace mukai::cli
