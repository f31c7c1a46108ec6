#include "tableau_orbits/text_io.hpp"

#include "tableau_orbits/errors.hpp"

#include <charconv>
#include <istream>
#include <iterator>

namespace tableau_orbits {

namespace {

std::vector<int> parse_row(std::string_view line, int line_no) {
    std::vector<int> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ' || line[pos] == '\t') {
            ++pos;
            continue;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        const auto consumed = static_cast<std::size_t>(ptr - (line.data() + pos));
        const bool at_boundary = pos + consumed == line.size() || line[pos + consumed] == ' ' ||
                                 line[pos + consumed] == '\t';
        if (ec != std::errc() || consumed == 0 || !at_boundary || value <= 0)
            throw StructuralError("malformed tableau text on line " + std::to_string(line_no) +
                                  ": expected positive integers");
        row.push_back(value);
        pos += consumed;
    }
    return row;
}

} // namespace

Tableau parse_tableau(std::string_view text) {
    std::vector<std::vector<int>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;
        pos = end + 1;
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            if (rows.empty())
                continue;
            break;
        }
        rows.push_back(parse_row(line, line_no));
    }
    if (rows.empty())
        throw StructuralError("no tableau rows in input");
    return Tableau::from_rows(std::move(rows));
}

Tableau read_tableau(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_tableau(text);
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.num_rows(); ++r) {
        bool first = true;
        for (int v : t.row(r)) {
            if (!first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

} // namespace tableau_orbits
