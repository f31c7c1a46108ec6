#pragma once

#include "tableau_orbits/orbit.hpp"
#include "tableau_orbits/shape.hpp"
#include "tableau_orbits/tableau.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace tableau_orbits {

/// Calls `visit` with the row-major cells of every SYT of `shape`, in
/// lexicographic order of those reading words. Shapes above 63 boxes are refused.
void for_each_syt_cells(const Shape& shape, const std::function<void(std::span<const int>)>& visit);
void for_each_syt(const Shape& shape, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_syt(const Shape& shape);

/// n! / product of hook lengths. Throws DomainError on 64-bit overflow.
std::uint64_t hook_length_count(const Shape& shape);

/// Every composition of n with at most `max_parts` positive parts.
void for_each_composition(int n, int max_parts, const std::function<void(std::span<const int>)>& visit);
/// Every column SSYT of `shape` whose value i occurs exactly exponents[i-1] times.
void for_each_column_ssyt(const Shape& shape, std::span<const int> exponents,
                          const std::function<void(const Tableau&)>& visit);

inline constexpr int kDefaultCensusLimit = 16;

struct CensusRecord {
    Shape shape;
    Method method = Method::Oracle;
    std::uint64_t tableau_count = 0;
    std::map<std::uint64_t, std::uint64_t> orbit_length_histogram;  // length -> number of orbits
    std::uint64_t partition_signature_classes = 0;
};

/// Splits all SYT of a rectangular shape into promotion orbits. Each orbit is
/// represented by its lexicographically least tableau (the first one the
/// enumeration reaches). `Both` checks fast = oracle for every tableau.
CensusRecord census(const Shape& shape, Method method, int limit = kDefaultCensusLimit);

} // namespace tableau_orbits
