#pragma once

#include "tableau_orbits/shape.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tableau_orbits {

/// Box coordinates. `col` is absolute, i.e. it includes the row's skew offset.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A filled (possibly skew) Young diagram. Entries are stored row-major; each row
/// carries the number of empty boxes to its left (the inner partition).
///
/// Construction checks the geometry only. Whether the filling is standard,
/// skew-standard or column semistandard is answered by the predicates below.
class Tableau {
public:
    Tableau() = default;

    /// Straight shape. Row lengths must be weakly decreasing (zero-length rows
    /// allowed, so zero-column tableaux are representable).
    static Tableau from_rows(std::vector<std::vector<int>> rows);
    /// Skew shape lambda/mu given by per-row offsets (mu) and row contents.
    static Tableau skew(std::vector<int> offsets, std::vector<std::vector<int>> rows);
    /// Straight shape from a row-major cell list.
    static Tableau from_shape(const Shape& shape, std::span<const int> cells);
    /// Rows placed flush left with arbitrary lengths. Used for the
    /// left-justified forms that equivalence works with.
    static Tableau left_justified(std::vector<std::vector<int>> rows);
    static Tableau zero_columns(int num_rows);

    int num_rows() const { return static_cast<int>(lengths_.size()); }
    int row_length(int r) const { return lengths_[r]; }
    int offset(int r) const { return offsets_[r]; }
    std::span<const int> row(int r) const {
        return {cells_.data() + starts_[r], static_cast<std::size_t>(lengths_[r])};
    }
    /// Entry at absolute column `col` of row `r`.
    int at(int r, int col) const { return cells_[starts_[r] + col - offsets_[r]]; }
    bool contains(int r, int col) const {
        return r >= 0 && r < num_rows() && col >= offsets_[r] && col < offsets_[r] + lengths_[r];
    }
    std::span<const int> cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool is_skew() const;
    /// Offsets zero and lengths weakly decreasing.
    bool is_straight() const;
    /// Straight, at least one row, all rows the same positive length.
    bool is_rectangular() const;
    /// Requires a straight shape with no zero-length rows.
    Shape shape() const;
    /// Largest entry (0 for an empty tableau).
    int max_entry() const;
    std::vector<int> sorted_entries() const;
    std::vector<std::vector<int>> to_rows() const;
    Tableau with_cells(std::vector<int> cells) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    /// Same geometry compares by row-major reading word.
    friend std::strong_ordering operator<=>(const Tableau& a, const Tableau& b);

private:
    void index_rows();

    std::vector<int> offsets_;
    std::vector<int> lengths_;
    std::vector<int> cells_;
    std::vector<int> starts_;
};

// ---------------------------------------------------------------------------
// Validity predicates

enum class Kind { Standard, SkewStandard, ColumnSsyt };

std::optional<Kind> parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);

/// Straight shape, entries exactly {1..n}, rows and columns strictly increasing.
bool is_standard(const Tableau& t);
/// Valid skew shape, every box smaller than the boxes to its right and below it.
bool is_skew_standard(const Tableau& t);
/// Straight shape, rows strictly increasing, columns weakly increasing,
/// every value 1..max present.
bool is_column_ssyt(const Tableau& t);
bool validate(const Tableau& t, Kind kind);

/// Multiplicities e_1..e_r of the values 1..r, r = largest entry.
std::vector<int> content_exponents(const Tableau& t);

// ---------------------------------------------------------------------------
// Sliding and promotion

/// Vacant box marker inside a sliding grid.
inline constexpr int kVacant = 0;

/// What to do when the boxes right of and below the hole hold equal values.
enum class TieRule {
    Forbidden,  // standard tableaux: cannot happen
    TakeRight,  // column SSYT: slide the right neighbour left
};

/// Slides the hole at `start` through a flush-left grid until it has no
/// occupied neighbour to the right or below. Vacant boxes count as absent.
/// Returns every position the hole occupied, `start` first.
std::vector<Cell> slide_hole(std::vector<std::vector<int>>& grid, Cell start, TieRule tie);

struct PromotionTrace {
    Tableau result;
    std::vector<Cell> path;
};

/// Jeu de taquin promotion of a standard tableau, with the hole's path.
PromotionTrace promote_traced(const Tableau& t);
Tableau promote(const Tableau& t);
Tableau promote_k(const Tableau& t, std::uint64_t k);

// ---------------------------------------------------------------------------
// Equivalence

/// Left-justifies every row and relabels the entries order-isomorphically to 1..n.
Tableau standardize_relabel(const Tableau& t);
bool equivalent(const Tableau& s, const Tableau& t);
/// Equivalent, and the sorted contents differ by one constant shift.
bool uniformly_equivalent(const Tableau& s, const Tableau& t);

// ---------------------------------------------------------------------------
// Uniformly proper subtableaux

/// Inclusive range of values.
struct ValueInterval {
    int lo = 0;
    int hi = 0;
    int length() const { return hi - lo + 1; }
    bool contains(int v) const { return v >= lo && v <= hi; }
    friend bool operator==(const ValueInterval&, const ValueInterval&) = default;
    friend auto operator<=>(const ValueInterval&, const ValueInterval&) = default;
};

struct UniformlyProper {
    ValueInterval interval;
    Tableau subtableau;  // skew, offsets relative to its leftmost box
    bool minimal = false;
};

struct UniformlyProperScan {
    std::vector<UniformlyProper> found;  // ordered by interval
    bool tableau_is_minimal = true;
};

/// Every uniformly proper rectangular subtableau of a rectangular SYT.
UniformlyProperScan find_uniformly_proper(const Tableau& t);

/// The boxes of `t` whose entries lie in `interval`, kept in place.
Tableau boxes_in_interval(const Tableau& t, ValueInterval interval);

struct Concatenation {
    Tableau left;    // T1, straight (possibly zero columns)
    Tableau middle;  // S
    Tableau right;   // T2
};

/// Splits t = T1 S T2 around the uniformly proper rectangular subtableau with
/// values in `interval`. The full value range is accepted and yields empty sides.
Concatenation concat_decompose(const Tableau& t, ValueInterval interval);
/// Row-wise horizontal concatenation, flush left.
Tableau concat(const Tableau& a, const Tableau& b);
Tableau recompose(const Concatenation& parts);

} // namespace tableau_orbits
