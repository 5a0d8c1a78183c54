#pragma once

#include <iosfwd>

namespace geonf::cli {

// Exit codes: 0 success, 1 usage or parse error, 2 guard failure (small divisors, precision, budgets) or a
// failed postcondition check.  Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geonf::cli
