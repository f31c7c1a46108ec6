#pragma once

#include <iosfwd>

namespace tableau_orbits {

/// Command-line entry point. Exit codes: 0 success, 1 domain error or failed
/// check, 2 usage error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tableau_orbits
