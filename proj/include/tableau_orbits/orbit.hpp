#pragma once

#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/tableau.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tableau_orbits {

/// The boxes of a tableau whose entries form one component's boundary set,
/// pushed flush left. For components of a rectangular SYT this is a rectangle.
struct ComponentTableau {
    std::vector<int> content;  // sorted boundary set
    Tableau grid;
    friend bool operator==(const ComponentTableau&, const ComponentTableau&) = default;
};

ComponentTableau component_tableau(const Tableau& t, std::span<const int> boundary);

/// One step of component promotion inside a tableau of `total_size` boxes:
/// plain decrement when 1 is absent, otherwise remove 1, slide, decrement and
/// put total_size in the vacated box.
ComponentTableau component_promote(const ComponentTableau& c, int total_size);
ComponentTableau component_promote_k(const ComponentTableau& c, int total_size, std::uint64_t k);
/// k-fold component promotion by standardizing, promoting the standard
/// tableau k times and relabelling with the rotated content. Only valid when
/// 1..k all belong to the content; returns nullopt otherwise.
std::optional<ComponentTableau> component_promote_k_shortcut(const ComponentTableau& c, int total_size, int k);

/// Least N >= 1 mapping the partition onto itself under rho^N.
int rotational_symmetry_order(const BoundaryPartition& blocks, int n);
/// Requires every boundary point to lie on an arc.
int rotational_symmetry_order(const MDiagram& m);

enum class Method { Oracle, Fast, Both };
std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method method);

struct ComponentTrace {
    std::vector<int> component_boundary;
    std::uint64_t k = 0;
    Tableau result_grid;
};

struct OrbitReport {
    Shape shape;
    Method method = Method::Oracle;
    std::uint64_t orbit_length = 0;
    std::optional<int> symmetry_order;  // N
    std::optional<int> multiplier;      // ell
    bool degenerate_to_oracle = false;
    std::vector<ComponentTrace> trace;
    std::vector<Tableau> orbit;  // filled by the oracle on request
};

/// Iterates promotion until the tableau returns. Works for any shape.
OrbitReport orbit_length_oracle(const Tableau& t, bool keep_orbit = false);
/// Rotational symmetry of the m-diagram and component promotion; rectangular only.
OrbitReport orbit_length_fast(const Tableau& t);
/// Dispatch on method. `Both` runs the two routes and throws InvariantError if
/// they disagree; the returned certificate is the fast one.
OrbitReport orbit_length(const Tableau& t, Method method);

} // namespace tableau_orbits
