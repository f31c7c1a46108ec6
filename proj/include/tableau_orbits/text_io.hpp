#pragma once

#include "tableau_orbits/tableau.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace tableau_orbits {

// Canonical text form: one row per line, entries in base 10 separated by a
// single space. A blank line or end of input ends the tableau. Skew shapes
// have no text form.

/// Throws StructuralError on non-numeric tokens, empty input or rows that
/// grow in length.
Tableau parse_tableau(std::string_view text);
Tableau read_tableau(std::istream& in);
/// Canonical text, every row newline-terminated.
std::string format_tableau(const Tableau& t);

} // namespace tableau_orbits
