#pragma once

#include "tableau_orbits/tableau.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace tableau_orbits {

/// Relabels the copies of each value top to bottom with consecutive integers,
/// values in increasing order. Column SSYT in, SYT of the same shape out.
Tableau psi(const Tableau& t);

/// Promotion of a column SSYT: every copy of 1 is removed in turn by sliding
/// (the right neighbour moves on ties), then entries drop by one and the
/// vacated boxes receive the largest value.
Tableau promote_ssyt(const Tableau& t);
Tableau promote_ssyt_k(const Tableau& t, std::uint64_t k);

/// Least R >= 1 with e shifted cyclically by R equal to e.
int content_period(std::span<const int> exponents);

enum class SsytMethod { Formula, Oracle, Both };
std::optional<SsytMethod> parse_ssyt_method(std::string_view name);
std::string_view ssyt_method_name(SsytMethod method);

struct SsytOrbitReport {
    Shape shape;
    SsytMethod method = SsytMethod::Formula;
    std::uint64_t orbit_length = 0;
    int period = 0;                   // R
    int sum_first_period = 0;         // e_1 + ... + e_R
    std::uint64_t syt_orbit_length = 0;  // orbit length of psi(t)
    std::uint64_t multiplier = 0;     // ell
    bool in_validated_domain = false;
};

/// Whether the orbit formula is known to hold for t: rectangular shape, or
/// every value occurring once. On other shapes the commutation of psi with
/// promotion can fail, e.g. for (1 2 / 1), and the formula with it.
bool formula_validated(const Tableau& t, std::span<const int> exponents);

/// Orbit length as ell * R with ell = lcm(sum, |O(psi t)|) / sum.
/// Outside formula_validated the value is reported but may be wrong.
/// The SYT orbit length is taken from `syt_orbit` when given, else from the
/// fast rectangular algorithm; non-rectangular input needs either `syt_orbit`
/// or `oracle_for_syt` (iterate promotion on psi(t)).
SsytOrbitReport orbit_length_ssyt(const Tableau& t, std::optional<std::uint64_t> syt_orbit = std::nullopt,
                                  bool oracle_for_syt = false);
/// Iterates promote_ssyt until the tableau returns.
std::uint64_t orbit_length_ssyt_oracle(const Tableau& t);
/// `Both` throws when formula and oracle disagree: InvariantError inside the
/// validated domain, DomainError outside it.
SsytOrbitReport orbit_length_ssyt(const Tableau& t, SsytMethod method);

} // namespace tableau_orbits
