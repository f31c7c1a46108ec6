#include "tableau_orbits/shape.hpp"

#include "tableau_orbits/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace tableau_orbits {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw StructuralError("shape rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw StructuralError("shape rows must be weakly decreasing");
        size_ += static_cast<std::size_t>(rows_[i]);
    }
}

Shape Shape::rectangle(int num_rows, int num_cols) {
    if (num_rows < 1 || num_cols < 1)
        throw DomainError("rectangle dimensions must be positive");
    return Shape(std::vector<int>(static_cast<std::size_t>(num_rows), num_cols));
}

Shape Shape::parse_rectangle(std::string_view text) {
    auto x = text.find('x');
    if (x == std::string_view::npos)
        throw DomainError("shape must look like RxC, got '" + std::string(text) + "'");
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw DomainError("shape must look like RxC, got '" + std::string(text) + "'");
        return value;
    };
    return rectangle(parse_int(text.substr(0, x)), parse_int(text.substr(x + 1)));
}

bool Shape::is_rectangular() const {
    return std::all_of(rows_.begin(), rows_.end(), [&](int len) { return len == rows_.front(); });
}

std::string Shape::to_string() const {
    if (!rows_.empty() && is_rectangular())
        return std::to_string(rows_.size()) + "x" + std::to_string(rows_.front());
    std::string out = "(";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(rows_[i]);
    }
    return out + ")";
}

std::vector<Shape> partitions_of(int n) {
    std::vector<Shape> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    if (n > 0)
        rec(n, n);
    return out;
}

} // namespace tableau_orbits
