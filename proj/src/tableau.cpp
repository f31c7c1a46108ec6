#include "tableau_orbits/tableau.hpp"

#include "tableau_orbits/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tableau_orbits {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
}

bool valid_skew_geometry(const std::vector<int>& offsets, const std::vector<int>& lengths) {
    std::vector<int> outer(lengths.size());
    for (std::size_t r = 0; r < lengths.size(); ++r)
        outer[r] = offsets[r] + lengths[r];
    return weakly_decreasing(offsets) && weakly_decreasing(outer);
}

bool rows_strictly_increase(const Tableau& t) {
    for (int r = 0; r < t.num_rows(); ++r) {
        auto row = t.row(r);
        if (std::adjacent_find(row.begin(), row.end(), std::greater_equal<>()) != row.end())
            return false;
    }
    return true;
}

bool has_positive_rows(const Tableau& t) {
    if (t.num_rows() == 0)
        return false;
    for (int r = 0; r < t.num_rows(); ++r)
        if (t.row_length(r) == 0)
            return false;
    return true;
}

bool distinct_entries(const Tableau& t) {
    auto sorted = t.sorted_entries();
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace

// ---------------------------------------------------------------------------
// Tableau

void Tableau::index_rows() {
    starts_.assign(lengths_.size(), 0);
    int acc = 0;
    for (std::size_t r = 0; r < lengths_.size(); ++r) {
        starts_[r] = acc;
        acc += lengths_[r];
    }
}

Tableau Tableau::left_justified(std::vector<std::vector<int>> rows) {
    Tableau t;
    t.offsets_.assign(rows.size(), 0);
    for (auto& row : rows) {
        for (int v : row)
            if (v <= 0)
                throw StructuralError("tableau entries must be positive integers");
        t.lengths_.push_back(static_cast<int>(row.size()));
        t.cells_.insert(t.cells_.end(), row.begin(), row.end());
    }
    t.index_rows();
    return t;
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() > rows[r - 1].size())
            throw StructuralError("row " + std::to_string(r + 1) + " is longer than the row above it");
    return left_justified(std::move(rows));
}

Tableau Tableau::skew(std::vector<int> offsets, std::vector<std::vector<int>> rows) {
    if (offsets.size() != rows.size())
        throw StructuralError("one offset per row required");
    Tableau t = left_justified(std::move(rows));
    for (int off : offsets)
        if (off < 0)
            throw StructuralError("offsets must be non-negative");
    if (!valid_skew_geometry(offsets, t.lengths_))
        throw StructuralError("offsets and row lengths do not describe a skew shape");
    t.offsets_ = std::move(offsets);
    return t;
}

Tableau Tableau::from_shape(const Shape& shape, std::span<const int> cells) {
    if (cells.size() != shape.size())
        throw StructuralError("entry count " + std::to_string(cells.size()) + " does not match shape size " +
                              std::to_string(shape.size()));
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : shape.rows()) {
        rows.emplace_back(cells.begin() + pos, cells.begin() + pos + len);
        pos += static_cast<std::size_t>(len);
    }
    return from_rows(std::move(rows));
}

Tableau Tableau::zero_columns(int num_rows) {
    return left_justified(std::vector<std::vector<int>>(static_cast<std::size_t>(num_rows)));
}

bool Tableau::is_skew() const {
    return std::any_of(offsets_.begin(), offsets_.end(), [](int o) { return o != 0; });
}

bool Tableau::is_straight() const {
    return !is_skew() && weakly_decreasing(lengths_);
}

bool Tableau::is_rectangular() const {
    return is_straight() && !lengths_.empty() && lengths_.front() > 0 &&
           std::all_of(lengths_.begin(), lengths_.end(), [&](int l) { return l == lengths_.front(); });
}

Shape Tableau::shape() const {
    if (!is_straight() || !has_positive_rows(*this))
        throw DomainError("tableau does not have a straight shape");
    return Shape(lengths_);
}

int Tableau::max_entry() const {
    return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

std::vector<int> Tableau::sorted_entries() const {
    auto out = cells_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> Tableau::to_rows() const {
    std::vector<std::vector<int>> out;
    out.reserve(lengths_.size());
    for (int r = 0; r < num_rows(); ++r) {
        auto span = row(r);
        out.emplace_back(span.begin(), span.end());
    }
    return out;
}

Tableau Tableau::with_cells(std::vector<int> cells) const {
    if (cells.size() != cells_.size())
        throw StructuralError("entry count does not match the tableau geometry");
    Tableau t = *this;
    t.cells_ = std::move(cells);
    return t;
}

std::strong_ordering operator<=>(const Tableau& a, const Tableau& b) {
    if (auto c = a.lengths_ <=> b.lengths_; c != 0)
        return c;
    if (auto c = a.offsets_ <=> b.offsets_; c != 0)
        return c;
    return a.cells_ <=> b.cells_;
}

// ---------------------------------------------------------------------------
// Predicates

std::optional<Kind> parse_kind(std::string_view name) {
    if (name == "standard")
        return Kind::Standard;
    if (name == "skew-standard")
        return Kind::SkewStandard;
    if (name == "column-ssyt")
        return Kind::ColumnSsyt;
    return std::nullopt;
}

std::string_view kind_name(Kind kind) {
    switch (kind) {
    case Kind::Standard: return "standard";
    case Kind::SkewStandard: return "skew-standard";
    case Kind::ColumnSsyt: return "column-ssyt";
    }
    return "?";
}

bool is_standard(const Tableau& t) {
    if (!t.is_straight() || !has_positive_rows(t))
        return false;
    auto sorted = t.sorted_entries();
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            return false;
    if (!rows_strictly_increase(t))
        return false;
    for (int r = 0; r + 1 < t.num_rows(); ++r)
        for (int c = 0; c < t.row_length(r + 1); ++c)
            if (t.at(r + 1, c) <= t.at(r, c))
                return false;
    return true;
}

bool is_skew_standard(const Tableau& t) {
    std::vector<int> offsets, lengths;
    for (int r = 0; r < t.num_rows(); ++r) {
        offsets.push_back(t.offset(r));
        lengths.push_back(t.row_length(r));
    }
    if (!valid_skew_geometry(offsets, lengths) || !rows_strictly_increase(t))
        return false;
    for (int r = 0; r + 1 < t.num_rows(); ++r)
        for (int c = t.offset(r); c < t.offset(r) + t.row_length(r); ++c)
            if (t.contains(r + 1, c) && t.at(r + 1, c) <= t.at(r, c))
                return false;
    return true;
}

bool is_column_ssyt(const Tableau& t) {
    if (!t.is_straight() || !has_positive_rows(t) || !rows_strictly_increase(t))
        return false;
    for (int r = 0; r + 1 < t.num_rows(); ++r)
        for (int c = 0; c < t.row_length(r + 1); ++c)
            if (t.at(r + 1, c) < t.at(r, c))
                return false;
    auto sorted = t.sorted_entries();
    if (sorted.front() != 1)
        return false;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] > 1)
            return false;
    return true;
}

bool validate(const Tableau& t, Kind kind) {
    switch (kind) {
    case Kind::Standard: return is_standard(t);
    case Kind::SkewStandard: return is_skew_standard(t);
    case Kind::ColumnSsyt: return is_column_ssyt(t);
    }
    return false;
}

std::vector<int> content_exponents(const Tableau& t) {
    std::vector<int> e(static_cast<std::size_t>(t.max_entry()), 0);
    for (int v : t.cells())
        ++e[static_cast<std::size_t>(v - 1)];
    return e;
}

// ---------------------------------------------------------------------------
// Sliding and promotion

std::vector<Cell> slide_hole(std::vector<std::vector<int>>& grid, Cell start, TieRule tie) {
    auto occupied = [&](int r, int c) {
        return r < static_cast<int>(grid.size()) && c < static_cast<int>(grid[r].size()) && grid[r][c] != kVacant;
    };
    Cell hole = start;
    std::vector<Cell> path{hole};
    while (true) {
        const bool has_right = occupied(hole.row, hole.col + 1);
        const bool has_below = occupied(hole.row + 1, hole.col);
        if (!has_right && !has_below)
            break;
        bool take_right = has_right;
        if (has_right && has_below) {
            const int b = grid[hole.row][hole.col + 1];
            const int a = grid[hole.row + 1][hole.col];
            if (a == b && tie == TieRule::Forbidden)
                throw InvariantError("equal neighbours while sliding a standard tableau");
            take_right = b <= a;
        }
        Cell next = take_right ? Cell{hole.row, hole.col + 1} : Cell{hole.row + 1, hole.col};
        grid[hole.row][hole.col] = grid[next.row][next.col];
        grid[next.row][next.col] = kVacant;
        hole = next;
        path.push_back(hole);
    }
    return path;
}

PromotionTrace promote_traced(const Tableau& t) {
    if (!is_standard(t))
        throw DomainError("promotion requires a standard Young tableau");
    auto grid = t.to_rows();
    const int n = static_cast<int>(t.size());
    grid[0][0] = kVacant;
    auto path = slide_hole(grid, {0, 0}, TieRule::Forbidden);
    for (auto& row : grid)
        for (int& v : row)
            if (v != kVacant)
                --v;
    grid[path.back().row][path.back().col] = n;
    return {Tableau::from_rows(std::move(grid)), std::move(path)};
}

Tableau promote(const Tableau& t) {
    return promote_traced(t).result;
}

Tableau promote_k(const Tableau& t, std::uint64_t k) {
    if (!is_standard(t))
        throw DomainError("promotion requires a standard Young tableau");
    Tableau cur = t;
    for (std::uint64_t i = 0; i < k; ++i)
        cur = promote(cur);
    return cur;
}

// ---------------------------------------------------------------------------
// Equivalence

Tableau standardize_relabel(const Tableau& t) {
    if (!distinct_entries(t))
        throw DomainError("standardization requires distinct entries");
    auto sorted = t.sorted_entries();
    auto rows = t.to_rows();
    for (auto& row : rows)
        for (int& v : row)
            v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    return Tableau::left_justified(std::move(rows));
}

bool equivalent(const Tableau& s, const Tableau& t) {
    if (s.size() != t.size())
        throw DomainError("equivalence requires tableaux of equal size");
    return standardize_relabel(s) == standardize_relabel(t);
}

bool uniformly_equivalent(const Tableau& s, const Tableau& t) {
    if (!equivalent(s, t))
        return false;
    auto a = s.sorted_entries();
    auto b = t.sorted_entries();
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] - b[i] != a[0] - b[0])
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Uniformly proper subtableaux

Tableau boxes_in_interval(const Tableau& t, ValueInterval interval) {
    std::vector<int> starts;
    std::vector<std::vector<int>> rows;
    bool any = false;
    for (int r = 0; r < t.num_rows(); ++r) {
        auto row = t.row(r);
        std::vector<int> picked;
        int start = t.offset(r) + static_cast<int>(std::count_if(row.begin(), row.end(),
                                                                 [&](int v) { return v < interval.lo; }));
        for (int v : row)
            if (interval.contains(v))
                picked.push_back(v);
        any = any || !picked.empty();
        starts.push_back(start);
        rows.push_back(std::move(picked));
    }
    if (!any)
        return Tableau::zero_columns(t.num_rows());
    const int base = *std::min_element(starts.begin(), starts.end());
    for (int& s : starts)
        s -= base;
    return Tableau::skew(std::move(starts), std::move(rows));
}

namespace {

bool is_uniformly_proper_interval(const Tableau& t, ValueInterval iv) {
    const int n = static_cast<int>(t.size());
    if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi || (iv.lo == 1 && iv.hi == n))
        return false;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < t.num_rows(); ++r) {
        std::vector<int> picked;
        for (int v : t.row(r))
            if (iv.contains(v))
                picked.push_back(v);
        if (picked.empty() || (!rows.empty() && picked.size() != rows.front().size()))
            return false;
        rows.push_back(std::move(picked));
    }
    return is_standard(standardize_relabel(Tableau::left_justified(std::move(rows))));
}

} // namespace

UniformlyProperScan find_uniformly_proper(const Tableau& t) {
    if (!t.is_rectangular() || !is_standard(t))
        throw DomainError("uniformly proper search requires a rectangular standard tableau");
    UniformlyProperScan scan;
    const int n = static_cast<int>(t.size());
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi)
            if (is_uniformly_proper_interval(t, {lo, hi}))
                scan.found.push_back({{lo, hi}, boxes_in_interval(t, {lo, hi}), false});
    for (auto& candidate : scan.found) {
        candidate.minimal = std::none_of(scan.found.begin(), scan.found.end(), [&](const UniformlyProper& other) {
            return other.interval != candidate.interval && other.interval.lo >= candidate.interval.lo &&
                   other.interval.hi <= candidate.interval.hi;
        });
    }
    scan.tableau_is_minimal = scan.found.empty();
    return scan;
}

Concatenation concat_decompose(const Tableau& t, ValueInterval interval) {
    if (!is_standard(t))
        throw DomainError("decomposition requires a standard tableau");
    const int n = static_cast<int>(t.size());
    if (interval.lo == 1 && interval.hi == n)
        return {Tableau::zero_columns(t.num_rows()), t, Tableau::zero_columns(t.num_rows())};
    if (!is_uniformly_proper_interval(t, interval))
        throw DomainError("values " + std::to_string(interval.lo) + ".." + std::to_string(interval.hi) +
                          " do not form a uniformly proper rectangular subtableau");
    std::vector<std::vector<int>> left;
    for (int r = 0; r < t.num_rows(); ++r) {
        auto row = t.row(r);
        left.emplace_back();
        for (int v : row)
            if (v < interval.lo)
                left.back().push_back(v);
    }
    return {Tableau::from_rows(std::move(left)), boxes_in_interval(t, interval),
            boxes_in_interval(t, {interval.hi + 1, n})};
}

Tableau concat(const Tableau& a, const Tableau& b) {
    if (a.num_rows() != b.num_rows())
        throw DomainError("horizontal concatenation requires equal row counts");
    auto rows = a.to_rows();
    for (int r = 0; r < b.num_rows(); ++r) {
        auto extra = b.row(r);
        rows[r].insert(rows[r].end(), extra.begin(), extra.end());
    }
    return Tableau::left_justified(std::move(rows));
}

Tableau recompose(const Concatenation& parts) {
    return concat(concat(parts.left, parts.middle), parts.right);
}

} // namespace tableau_orbits
