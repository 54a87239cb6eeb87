#pragma once

// Command-line front end. Every subcommand reads one JSON document (from
// --input, --json or standard input) and writes one JSON document.
// Exit codes: 0 success, 2 input error, 1 internal failure.

#include <istream>
#include <ostream>
#include <span>
#include <string>

namespace nilcone::cli {

/// args excludes the program name.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nilcone::cli
