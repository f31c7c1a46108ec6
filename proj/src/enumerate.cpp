#include "tableau_orbits/enumerate.hpp"

#include "tableau_orbits/errors.hpp"
#include "tableau_orbits/mdiagram.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace tableau_orbits {

namespace {

// Row-major backtracking. A value is tried at a cell only if it exceeds its
// left and upper neighbours and leaves room for the boxes south-east of the
// cell. After each placement the smallest unused value u must still have a
// home: the boxes holding values below u form a partition, and one of its
// addable corners has to be an empty box.
class SytSearch {
public:
    SytSearch(const Shape& shape, const std::function<void(std::span<const int>)>& visit)
        : lambda_(shape.rows()), n_(static_cast<int>(shape.size())), visit_(visit) {
        for (int r = 0; r < shape.num_rows(); ++r) {
            row_start_.push_back(static_cast<int>(row_of_.size()));
            for (int c = 0; c < lambda_[r]; ++c) {
                row_of_.push_back(r);
                col_of_.push_back(c);
                int below_right = 0;
                for (int rr = r; rr < shape.num_rows(); ++rr)
                    below_right += std::max(0, lambda_[rr] - c);
                room_.push_back(below_right);
            }
        }
        vals_.assign(static_cast<std::size_t>(n_), 0);
    }

    void run() { dfs(0); }

private:
    void dfs(int i) {
        if (i == n_) {
            visit_(vals_);
            return;
        }
        const int r = row_of_[i];
        const int c = col_of_[i];
        int lo = (r + 1) * (c + 1);
        if (c > 0)
            lo = std::max(lo, vals_[i - 1] + 1);
        if (r > 0)
            lo = std::max(lo, vals_[row_start_[r - 1] + c] + 1);
        const int hi = n_ - room_[i] + 1;
        for (int v = lo; v <= hi; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (used_ & bit)
                continue;
            used_ |= bit;
            vals_[i] = v;
            if (smallest_unused_fits(i))
                dfs(i + 1);
            used_ &= ~bit;
        }
        vals_[i] = 0;
    }

    bool smallest_unused_fits(int i) const {
        const int u = std::countr_one(used_ >> 1) + 1;
        if (u > n_)
            return true;
        const int r = row_of_[i];
        const int c = col_of_[i];
        // boxes below u in rows r-1 and r
        int above = n_;
        int here = 0;
        for (int rr = 0; rr <= r; ++rr) {
            const int placed = rr < r ? lambda_[rr] : c + 1;
            int below_u = 0;
            while (below_u < placed && vals_[row_start_[rr] + below_u] < u)
                ++below_u;
            if (below_u > (rr == 0 ? n_ : here))
                return false;
            above = rr == 0 ? n_ : here;
            here = below_u;
        }
        const bool corner_in_row = here == c + 1 && here < lambda_[r] && above > here;
        const bool corner_below = r + 1 < static_cast<int>(lambda_.size()) && here > 0;
        return corner_in_row || corner_below;
    }

    std::vector<int> lambda_;
    int n_;
    const std::function<void(std::span<const int>)>& visit_;
    std::vector<int> row_start_, row_of_, col_of_, room_;
    std::vector<int> vals_;
    std::uint64_t used_ = 0;
};

struct CellsHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

BoundaryPartition signature_key(const Tableau& t) {
    const int n = static_cast<int>(t.size());
    if (t.num_rows() == 1) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return {all};
    }
    return rotation_class_key(partition_signature(build_mdiagram(t)), n);
}

} // namespace

void for_each_syt_cells(const Shape& shape, const std::function<void(std::span<const int>)>& visit) {
    if (shape.size() > 63)
        throw DomainError("enumeration is limited to shapes with at most 63 boxes");
    if (shape.size() == 0)
        return;
    SytSearch(shape, visit).run();
}

void for_each_syt(const Shape& shape, const std::function<void(const Tableau&)>& visit) {
    for_each_syt_cells(shape, [&](std::span<const int> cells) { visit(Tableau::from_shape(shape, cells)); });
}

std::vector<Tableau> enumerate_syt(const Shape& shape) {
    std::vector<Tableau> out;
    for_each_syt(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::uint64_t hook_length_count(const Shape& shape) {
    const int n = static_cast<int>(shape.size());
    // exponent of each prime in n! / prod(hooks)
    std::vector<int> exponent(static_cast<std::size_t>(n) + 1, 0);
    auto add_factors = [&](int x, int sign) {
        for (int p = 2; x > 1; ++p)
            while (x % p == 0) {
                exponent[p] += sign;
                x /= p;
            }
    };
    for (int k = 2; k <= n; ++k)
        add_factors(k, +1);
    for (int r = 0; r < shape.num_rows(); ++r)
        for (int c = 0; c < shape.row_length(r); ++c) {
            int leg = 0;
            for (int rr = r + 1; rr < shape.num_rows() && shape.row_length(rr) > c; ++rr)
                ++leg;
            add_factors(shape.row_length(r) - c + leg, -1);
        }
    std::uint64_t result = 1;
    for (int p = 2; p <= n; ++p) {
        if (exponent[p] < 0)
            throw InvariantError("hook product does not divide n!");
        for (int e = 0; e < exponent[p]; ++e) {
            if (result > UINT64_MAX / static_cast<std::uint64_t>(p))
                throw DomainError("hook-length count exceeds 64 bits");
            result *= static_cast<std::uint64_t>(p);
        }
    }
    return result;
}

void for_each_composition(int n, int max_parts, const std::function<void(std::span<const int>)>& visit) {
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            visit(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts)
            return;
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p);
            parts.pop_back();
        }
    };
    if (n > 0 && max_parts > 0)
        rec(n);
}

void for_each_column_ssyt(const Shape& shape, std::span<const int> exponents,
                          const std::function<void(const Tableau&)>& visit) {
    const int total = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (total != static_cast<int>(shape.size()))
        return;
    const int values = static_cast<int>(exponents.size());
    std::vector<int> left(exponents.begin(), exponents.end());
    std::vector<int> cells(shape.size(), 0);
    std::vector<int> row_start;
    std::vector<Cell> pos;
    for (int r = 0; r < shape.num_rows(); ++r) {
        row_start.push_back(static_cast<int>(pos.size()));
        for (int c = 0; c < shape.row_length(r); ++c)
            pos.push_back({r, c});
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            visit(Tableau::from_shape(shape, cells));
            return;
        }
        const auto [r, c] = pos[i];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, cells[i - 1] + 1);
        if (r > 0)
            lo = std::max(lo, cells[static_cast<std::size_t>(row_start[r - 1] + c)]);
        for (int v = lo; v <= values; ++v) {
            if (left[v - 1] == 0)
                continue;
            --left[v - 1];
            cells[i] = v;
            rec(i + 1);
            ++left[v - 1];
        }
    };
    rec(0);
}

CensusRecord census(const Shape& shape, Method method, int limit) {
    if (!shape.is_rectangular())
        throw DomainError("census is defined for rectangular shapes");
    if (static_cast<long long>(shape.size()) > limit)
        throw DomainError("shape " + shape.to_string() + " has " + std::to_string(shape.size()) +
                          " boxes, above the census limit of " + std::to_string(limit));

    CensusRecord record;
    record.shape = shape;
    record.method = method;

    std::unordered_map<std::vector<int>, std::size_t, CellsHash> orbit_of;
    std::vector<BoundaryPartition> orbit_key;
    std::set<BoundaryPartition> classes;

    for_each_syt(shape, [&](const Tableau& t) {
        ++record.tableau_count;
        auto key = signature_key(t);
        classes.insert(key);

        std::vector<int> cells(t.cells().begin(), t.cells().end());
        if (auto it = orbit_of.find(cells); it != orbit_of.end()) {
            if (orbit_key[it->second] != key)
                throw InvariantError("tableaux in one orbit have different partition signature classes");
            return;
        }

        std::vector<Tableau> members;
        if (method == Method::Fast) {
            const auto length = orbit_length_fast(t).orbit_length;
            Tableau cur = t;
            for (std::uint64_t k = 0; k < length; ++k) {
                members.push_back(cur);
                cur = promote(cur);
            }
            if (cur != t)
                throw InvariantError("promotion did not return after the fast orbit length");
        } else {
            members = orbit_length_oracle(t, true).orbit;
            if (method == Method::Both)
                for (const auto& m : members)
                    if (orbit_length_fast(m).orbit_length != members.size())
                        throw InvariantError("fast and oracle orbit lengths differ");
        }

        const std::size_t id = orbit_key.size();
        orbit_key.push_back(std::move(key));
        for (const auto& m : members)
            orbit_of.emplace(std::vector<int>(m.cells().begin(), m.cells().end()), id);
        ++record.orbit_length_histogram[members.size()];
    });

    record.partition_signature_classes = classes.size();
    std::uint64_t covered = 0;
    for (const auto& [length, orbits] : record.orbit_length_histogram)
        covered += length * orbits;
    if (covered != record.tableau_count)
        throw InvariantError("orbits do not partition the enumerated tableaux");
    return record;
}

} // namespace tableau_orbits
