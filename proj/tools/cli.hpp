#pragma once
// Command-line front end. Subcommands: reify, solve, optimize, check, metaenc, crosscheck.
// A program file of `-` is read from `in`.

#include <iosfwd>
#include <string>
#include <vector>

namespace metaopt::cli {

enum ExitCode : int {
    ok = 0,
    disagree = 1,
    usage = 2,
    parse_error = 3,
    cap_exceeded = 4,
    no_solution = 10,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace metaopt::cli
