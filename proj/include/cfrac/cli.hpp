#pragma once

// Command-line front end.
//
//   cfrac eval --op <chain> --fn <expr> (--at <x> | --grid a:b:n)
//              [--x0 <float|-inf>] [--method closed|numeric|both]
//              [--degree N] [--rel-tol t] [--format csv|json] [--out path]
//   cfrac selftest [--filter name] [--seed n]
//
// Exit codes: 0 success, 1 parse/usage error, 2 domain error (including
// unsupported closed forms), 3 convergence failure at some point.

#include <iosfwd>
#include <string>
#include <vector>

namespace cfrac::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kConvergenceError = 3 };

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "a:b:n" into n evenly spaced points with both endpoints.
std::vector<double> parse_grid(const std::string& grid);

}  // namespace cfrac::cli
