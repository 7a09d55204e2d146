#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tcalc {

// Dispatches one subcommand. Exit code 0: success, report on `out`.
// 1: domain or resource error, structured JSON error on `out` plus a
// one-line message on `err`.  2: usage error, message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcalc
