#pragma once

// Independent reference implementations used only by tests. None of them
// share code with the library routines they check.

#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/shape.hpp"
#include "tableau_orbits/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using tableau_orbits::Arc;
using tableau_orbits::Shape;
using tableau_orbits::Tableau;

using Grid = std::vector<std::vector<int>>;

inline Grid rows_of(const Tableau& t) {
    return t.to_rows();
}

// Swap i and i+1 wherever the result stays standard (i.e. they are not in the
// same row or column adjacency).
inline void bender_knuth(Grid& g, int i) {
    int ri = -1, ci = -1, rj = -1, cj = -1;
    for (int r = 0; r < static_cast<int>(g.size()); ++r)
        for (int c = 0; c < static_cast<int>(g[r].size()); ++c) {
            if (g[r][c] == i) {
                ri = r;
                ci = c;
            } else if (g[r][c] == i + 1) {
                rj = r;
                cj = c;
            }
        }
    const bool same_row = ri == rj && std::abs(ci - cj) == 1;
    const bool same_col = ci == cj && std::abs(ri - rj) == 1;
    if (!same_row && !same_col)
        std::swap(g[ri][ci], g[rj][cj]);
}

// Promotion of a straight SYT as the product s_1 s_2 ... s_{n-1} of
// elementary swaps, applied left to right.
inline Tableau promote_by_swaps(const Tableau& t) {
    Grid g = rows_of(t);
    const int n = static_cast<int>(t.size());
    for (int i = 1; i < n; ++i)
        bender_knuth(g, i);
    return Tableau::from_rows(g);
}

// phi by bracket matching: reading row i's entries as '(' and row i+1's as
// ')', in increasing order, each ')' closes the most recent open '('.
inline std::vector<std::vector<Arc>> bracket_layers(const Tableau& t) {
    std::vector<std::vector<Arc>> layers;
    const Grid g = rows_of(t);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        std::vector<std::pair<int, int>> events;  // value, row tag
        for (int v : g[i])
            events.push_back({v, 0});
        for (int v : g[i + 1])
            events.push_back({v, 1});
        std::sort(events.begin(), events.end());
        std::vector<int> stack;
        std::vector<Arc> arcs;
        for (auto [v, tag] : events) {
            if (tag == 0) {
                stack.push_back(v);
            } else {
                arcs.push_back({stack.back(), v});
                stack.pop_back();
            }
        }
        std::sort(arcs.begin(), arcs.end());
        layers.push_back(arcs);
    }
    return layers;
}

inline bool arcs_cross(const Arc& x, const Arc& y) {
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

inline bool share_endpoint(const Arc& x, const Arc& y) {
    return x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b;
}

// A subset is closed when no outside arc shares an endpoint with or crosses
// an inside arc.
inline bool closed_subset(const std::vector<Arc>& arcs, std::uint32_t mask) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (!(mask >> i & 1))
            continue;
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            if (mask >> j & 1)
                continue;
            if (share_endpoint(arcs[i], arcs[j]) || arcs_cross(arcs[i], arcs[j]))
                return false;
        }
    }
    return true;
}

// Minimal nonempty closed subsets by exhaustive search. Feasible for small
// arc counts only.
inline std::set<std::vector<Arc>> brute_components(const std::vector<Arc>& arcs) {
    const std::uint32_t full = (std::uint32_t{1} << arcs.size()) - 1;
    std::vector<std::uint32_t> closed;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (closed_subset(arcs, mask))
            closed.push_back(mask);
    std::set<std::vector<Arc>> out;
    for (std::uint32_t m : closed) {
        bool minimal = true;
        for (std::uint32_t s : closed)
            if (s != m && (s & m) == s) {
                minimal = false;
                break;
            }
        if (!minimal)
            continue;
        std::vector<Arc> comp;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (m >> i & 1)
                comp.push_back(arcs[i]);
        out.insert(comp);
    }
    return out;
}

// Uniformly random order of growth: each value goes into a uniformly chosen
// addable corner. Not the uniform distribution on SYT, but every SYT has
// positive probability.
inline Tableau random_syt(const Shape& shape, std::mt19937_64& rng) {
    const int rows = shape.num_rows();
    Grid g(static_cast<std::size_t>(rows));
    const int n = static_cast<int>(shape.size());
    for (int v = 1; v <= n; ++v) {
        std::vector<int> corners;
        for (int r = 0; r < rows; ++r) {
            const int len = static_cast<int>(g[r].size());
            if (len < shape.row_length(r) && (r == 0 || static_cast<int>(g[r - 1].size()) > len))
                corners.push_back(r);
        }
        std::uniform_int_distribution<std::size_t> pick(0, corners.size() - 1);
        g[static_cast<std::size_t>(corners[pick(rng)])].push_back(v);
    }
    return Tableau::from_rows(g);
}

// Random noncrossing perfect matching on 2k points from a random Dyck path
// (fair coin whenever both steps are allowed; not uniform, full support).
inline std::vector<Arc> random_noncrossing(int k, std::mt19937_64& rng) {
    std::vector<Arc> arcs;
    std::vector<int> stack;
    int opened = 0;
    for (int p = 1; p <= 2 * k; ++p) {
        const bool can_open = opened < k;
        const bool can_close = !stack.empty();
        bool open = can_open;
        if (can_open && can_close)
            open = std::bernoulli_distribution(0.5)(rng);
        if (open) {
            stack.push_back(p);
            ++opened;
        } else {
            arcs.push_back({stack.back(), p});
            stack.pop_back();
        }
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

inline Shape random_rectangle(std::mt19937_64& rng, int max_rows, int max_cols, int max_size) {
    std::uniform_int_distribution<int> rd(1, max_rows), cd(1, max_cols);
    for (;;) {
        const int r = rd(rng), c = cd(rng);
        if (r * c <= max_size)
            return Shape::rectangle(r, c);
    }
}

// Every permutation of 1..n placed row-major, filtered by standardness.
inline std::vector<Tableau> brute_syt(const Shape& shape) {
    std::vector<int> perm(shape.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i) + 1;
    std::vector<Tableau> out;
    do {
        Tableau t = Tableau::from_shape(shape, perm);
        if (tableau_orbits::is_standard(t))
            out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace oracle
