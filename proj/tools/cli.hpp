#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace definetti::cli {

// Runs one subcommand. args excludes the program name. Data goes to out,
// diagnostics to err. Exit codes: 0 ok, 2 bad arguments, 3 size-cap refusal,
// 4 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace definetti::cli
