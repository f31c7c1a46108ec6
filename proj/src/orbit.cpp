#include "tableau_orbits/orbit.hpp"

#include "tableau_orbits/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tableau_orbits {

namespace {

void check_component(const ComponentTableau& c, int total_size) {
    const auto& g = c.grid;
    if (!g.is_rectangular() || !is_skew_standard(g) || g.sorted_entries() != c.content)
        throw DomainError("malformed component tableau");
    if (c.content.front() < 1 || c.content.back() > total_size ||
        std::adjacent_find(c.content.begin(), c.content.end()) != c.content.end())
        throw DomainError("component content must be distinct values in 1.." + std::to_string(total_size));
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

std::vector<int> rotated_content(const std::vector<int>& content, int n, std::uint64_t k) {
    std::vector<int> out;
    out.reserve(content.size());
    const int shift = static_cast<int>(k % static_cast<std::uint64_t>(n));
    for (int v : content)
        out.push_back(rotate_point(v, n, shift));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ComponentTableau component_tableau(const Tableau& t, std::span<const int> boundary) {
    std::vector<int> content(boundary.begin(), boundary.end());
    std::sort(content.begin(), content.end());
    std::vector<std::vector<int>> rows;
    std::size_t found = 0;
    for (int r = 0; r < t.num_rows(); ++r) {
        rows.emplace_back();
        for (int v : t.row(r))
            if (std::binary_search(content.begin(), content.end(), v))
                rows.back().push_back(v);
        found += rows.back().size();
    }
    if (found != content.size())
        throw DomainError("boundary set contains values that are not entries of the tableau");
    ComponentTableau c{std::move(content), Tableau::left_justified(std::move(rows))};
    if (!c.grid.is_rectangular())
        throw DomainError("component boxes do not form a rectangle");
    return c;
}

ComponentTableau component_promote(const ComponentTableau& c, int total_size) {
    check_component(c, total_size);
    auto grid = c.grid.to_rows();
    if (c.content.front() != 1) {
        for (auto& row : grid)
            for (int& v : row)
                --v;
    } else {
        grid[0][0] = kVacant;
        auto path = slide_hole(grid, {0, 0}, TieRule::Forbidden);
        for (auto& row : grid)
            for (int& v : row)
                if (v != kVacant)
                    --v;
        grid[path.back().row][path.back().col] = total_size;
    }
    return {rotated_content(c.content, total_size, 1), Tableau::left_justified(std::move(grid))};
}

ComponentTableau component_promote_k(const ComponentTableau& c, int total_size, std::uint64_t k) {
    check_component(c, total_size);
    ComponentTableau cur = c;
    for (std::uint64_t i = 0; i < k; ++i)
        cur = component_promote(cur, total_size);
    return cur;
}

std::optional<ComponentTableau> component_promote_k_shortcut(const ComponentTableau& c, int total_size, int k) {
    check_component(c, total_size);
    if (k < 0 || k > static_cast<int>(c.content.size()))
        return std::nullopt;
    for (int i = 0; i < k; ++i)
        if (c.content[i] != i + 1)
            return std::nullopt;
    const Tableau promoted = promote_k(standardize_relabel(c.grid), static_cast<std::uint64_t>(k));
    auto labels = rotated_content(c.content, total_size, static_cast<std::uint64_t>(k));
    std::vector<int> cells;
    for (int v : promoted.cells())
        cells.push_back(labels[v - 1]);
    return ComponentTableau{std::move(labels), promoted.with_cells(std::move(cells))};
}

int rotational_symmetry_order(const BoundaryPartition& blocks, int n) {
    if (n <= 0)
        throw DomainError("rotational symmetry needs a nonempty boundary");
    const auto base = canonical_partition(blocks);
    for (int d : divisors(n))
        if (rotate(base, n, d) == base)
            return d;
    // rho^n is the identity, so the divisor scan always succeeds
    throw InvariantError("no rotational symmetry found among divisors of " + std::to_string(n));
}

int rotational_symmetry_order(const MDiagram& m) {
    const auto blocks = partition_signature(m);
    std::size_t covered = 0;
    for (const auto& block : blocks)
        covered += block.size();
    if (static_cast<int>(covered) != m.boundary_size())
        throw DomainError("some boundary points lie on no arc");
    return rotational_symmetry_order(blocks, m.boundary_size());
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "oracle")
        return Method::Oracle;
    if (name == "fast")
        return Method::Fast;
    if (name == "both")
        return Method::Both;
    return std::nullopt;
}

std::string_view method_name(Method method) {
    switch (method) {
    case Method::Oracle: return "oracle";
    case Method::Fast: return "fast";
    case Method::Both: return "both";
    }
    return "?";
}

OrbitReport orbit_length_oracle(const Tableau& t, bool keep_orbit) {
    if (!is_standard(t))
        throw DomainError("orbit computation requires a standard Young tableau");
    OrbitReport report;
    report.shape = t.shape();
    report.method = Method::Oracle;
    Tableau cur = t;
    std::uint64_t k = 0;
    do {
        if (keep_orbit)
            report.orbit.push_back(cur);
        cur = promote(cur);
        ++k;
    } while (cur != t);
    report.orbit_length = k;
    if (t.is_rectangular() && t.size() % k != 0)
        throw InvariantError("orbit length " + std::to_string(k) + " does not divide " + std::to_string(t.size()));
    return report;
}

OrbitReport orbit_length_fast(const Tableau& t) {
    if (!is_standard(t) || !t.is_rectangular())
        throw DomainError("the fast orbit algorithm requires a rectangular standard tableau");
    const int n = static_cast<int>(t.size());

    BoundaryPartition blocks;
    if (t.num_rows() == 1) {
        // no arcs at all: treat the single row as one component covering 1..n
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        blocks.push_back(std::move(all));
    } else {
        const auto parts = decompose(build_mdiagram(t));
        blocks = parts.boundary_sets;
        std::size_t covered = 0;
        for (const auto& block : blocks)
            covered += block.size();
        if (static_cast<int>(covered) != n)
            throw InvariantError("m-diagram of a rectangular tableau leaves boundary points uncovered");
    }

    OrbitReport report;
    report.shape = t.shape();
    report.method = Method::Fast;
    report.degenerate_to_oracle = blocks.size() == 1;

    const int symmetry = rotational_symmetry_order(blocks, n);
    report.symmetry_order = symmetry;

    std::vector<ComponentTableau> start, current;
    for (const auto& block : blocks)
        start.push_back(component_tableau(t, block));
    current = start;

    auto index_of_block = [&](const std::vector<int>& content) -> std::size_t {
        auto it = std::find(blocks.begin(), blocks.end(), content);
        if (it == blocks.end())
            throw InvariantError("rotated boundary set is not a boundary set");
        return static_cast<std::size_t>(it - blocks.begin());
    };

    std::uint64_t done = 0;
    for (int ell = 1; static_cast<long long>(ell) * symmetry <= n; ++ell) {
        const int steps = ell * symmetry;
        if (n % steps != 0)
            continue;
        for (auto& c : current)
            c = component_promote_k(c, n, static_cast<std::uint64_t>(steps) - done);
        done = static_cast<std::uint64_t>(steps);

        bool all_match = true;
        for (std::size_t i = 0; i < current.size() && all_match; ++i)
            all_match = current[i] == start[index_of_block(current[i].content)];
        if (!all_match)
            continue;

        report.multiplier = ell;
        report.orbit_length = static_cast<std::uint64_t>(steps);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            report.trace.push_back({blocks[i], done, current[i].grid});
        return report;
    }
    throw InvariantError("no multiplier found up to the tableau size");
}

OrbitReport orbit_length(const Tableau& t, Method method) {
    switch (method) {
    case Method::Oracle: return orbit_length_oracle(t);
    case Method::Fast: return orbit_length_fast(t);
    case Method::Both: {
        auto fast = orbit_length_fast(t);
        const auto oracle = orbit_length_oracle(t);
        if (fast.orbit_length != oracle.orbit_length)
            throw InvariantError("fast orbit length " + std::to_string(fast.orbit_length) +
                                 " differs from oracle orbit length " + std::to_string(oracle.orbit_length));
        fast.method = Method::Both;
        return fast;
    }
    }
    throw DomainError("unknown method");
}

} // namespace tableau_orbits
