#include "tableau_orbits/mdiagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace tableau_orbits {

namespace {

constexpr int kUnit = 20;    // pixels between neighbouring boundary points
constexpr int kMargin = 20;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
};

} // namespace

std::string render_svg(const MDiagram& m) {
    const int n = m.boundary_size();
    const auto parts = decompose(m);

    std::map<Arc, std::size_t> colour_of;
    for (std::size_t c = 0; c < parts.components.size(); ++c)
        for (const auto& arc : parts.components[c])
            colour_of[arc] = c;

    int max_span = 0;
    for (const auto& arc : m.arcs())
        max_span = std::max(max_span, arc.b - arc.a);
    // radius is span * kUnit / 2; kUnit is even so every coordinate is an integer
    const int width = (n + 1) * kUnit + 2 * kMargin;
    const int baseline = kMargin + max_span * kUnit / 2 + kUnit / 2;
    const int height = baseline + kMargin + kUnit;

    auto x_of = [&](int p) { return kMargin + p * kUnit; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <line x1=\"" << x_of(0) << "\" y1=\"" << baseline << "\" x2=\"" << x_of(n + 1) << "\" y2=\""
        << baseline << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    for (const auto& arc : m.arcs()) {
        const int r = (arc.b - arc.a) * kUnit / 2;
        svg << "  <path d=\"M " << x_of(arc.a) << " " << baseline << " A " << r << " " << r << " 0 0 1 "
            << x_of(arc.b) << " " << baseline << "\" fill=\"none\" stroke=\""
            << kPalette[colour_of.at(arc) % kPalette.size()] << "\" stroke-width=\"2\"/>\n";
    }
    for (int p = 1; p <= n; ++p) {
        svg << "  <circle cx=\"" << x_of(p) << "\" cy=\"" << baseline << "\" r=\"3\" fill=\"#000000\"/>\n";
        svg << "  <text x=\"" << x_of(p) << "\" y=\"" << baseline + kUnit
            << "\" font-size=\"10\" text-anchor=\"middle\">" << p << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tableau_orbits
