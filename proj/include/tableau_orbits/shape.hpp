#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tableau_orbits {

/// A partition: weakly decreasing, strictly positive row lengths.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> rows);

    static Shape rectangle(int num_rows, int num_cols);
    /// Parses "RxC" (e.g. "4x6").
    static Shape parse_rectangle(std::string_view text);

    const std::vector<int>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_length(int r) const { return rows_[r]; }
    int num_cols() const { return rows_.empty() ? 0 : rows_.front(); }
    std::size_t size() const { return size_; }
    bool is_rectangular() const;

    std::string to_string() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> rows_;
    std::size_t size_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Shape> partitions_of(int n);

} // namespace tableau_orbits
