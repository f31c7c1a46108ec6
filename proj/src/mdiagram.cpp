#include "tableau_orbits/mdiagram.hpp"

#include "tableau_orbits/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tableau_orbits {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y)
            return;
        if (rank_[x] < rank_[y])
            std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y])
            ++rank_[x];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> rank_;
};

std::vector<int> endpoints_of(std::span<const Arc> arcs) {
    std::vector<int> pts;
    for (const auto& arc : arcs) {
        pts.push_back(arc.a);
        pts.push_back(arc.b);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Arc> sorted_arcs(std::span<const Arc> arcs) {
    std::vector<Arc> out(arcs.begin(), arcs.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

Arc make_arc(int x, int y) {
    return x <= y ? Arc{x, y} : Arc{y, x};
}

bool crosses(const Arc& x, const Arc& y) {
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

int rotate_point(int p, int n, int k) {
    const long long shifted = (static_cast<long long>(p) - 1 - k) % n;
    return static_cast<int>((shifted + n) % n) + 1;
}

Arc rotate(const Arc& arc, int n, int k) {
    return make_arc(rotate_point(arc.a, n, k), rotate_point(arc.b, n, k));
}

// ---------------------------------------------------------------------------
// Matching

Matching::Matching(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0)
        throw StructuralError("boundary size must be non-negative");
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (auto& arc : arcs_) {
        arc = make_arc(arc.a, arc.b);
        if (arc.a < 1 || arc.b > n)
            throw StructuralError("arc endpoint outside 1.." + std::to_string(n));
        if (used[arc.a] || (arc.b != arc.a && used[arc.b]))
            throw StructuralError("a point lies on more than one arc of a matching");
        used[arc.a] = used[arc.b] = true;
    }
    std::sort(arcs_.begin(), arcs_.end());
}

bool Matching::is_perfect() const {
    return static_cast<int>(endpoints_of(arcs_).size()) == n_;
}

bool Matching::is_crossing() const {
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        for (std::size_t j = i + 1; j < arcs_.size(); ++j)
            if (crosses(arcs_[i], arcs_[j]))
                return true;
    return false;
}

bool Matching::has_repetition() const {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& arc) { return arc.a == arc.b; });
}

bool Matching::is_standard() const {
    std::vector<int> all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 1);
    return is_standard_on(all);
}

bool Matching::is_standard_on(std::span<const int> points) const {
    const auto on_arc = endpoints_of(arcs_);
    for (const auto& arc : arcs_)
        for (int p : points)
            if (arc.a < p && p < arc.b && !std::binary_search(on_arc.begin(), on_arc.end(), p))
                return false;
    return true;
}

Matching rotate(const Matching& m, int k) {
    std::vector<Arc> arcs;
    arcs.reserve(m.size());
    for (const auto& arc : m.arcs())
        arcs.push_back(rotate(arc, m.boundary_size(), k));
    return Matching(m.boundary_size(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// MDiagram

MDiagram::MDiagram(int n, std::vector<Matching> layers) : n_(n), layers_(std::move(layers)) {
    std::set<Arc> all;
    for (const auto& layer : layers_) {
        if (layer.boundary_size() != n)
            throw StructuralError("layer boundary size differs from the diagram's");
        if (layer.is_crossing())
            throw DomainError("m-diagram layers must be noncrossing matchings");
        all.insert(layer.arcs().begin(), layer.arcs().end());
    }
    arcs_.assign(all.begin(), all.end());
}

MDiagram build_mdiagram(const Tableau& t) {
    if (!is_standard(t))
        throw DomainError("m-diagrams are built from standard Young tableaux");
    const int n = static_cast<int>(t.size());
    std::vector<Matching> layers;
    for (int r = 0; r + 1 < t.num_rows(); ++r) {
        auto upper = t.row(r);
        std::vector<bool> used(upper.size(), false);
        std::vector<Arc> arcs;
        for (int lower : t.row(r + 1)) {
            int pick = -1;
            for (int s = 0; s < static_cast<int>(upper.size()) && upper[s] <= lower; ++s)
                if (!used[s])
                    pick = s;
            if (pick < 0)
                throw InvariantError("no unmatched smaller entry in the row above " + std::to_string(lower));
            used[pick] = true;
            arcs.push_back({upper[pick], lower});
        }
        layers.emplace_back(n, std::move(arcs));
    }
    return MDiagram(n, std::move(layers));
}

MDiagram rotate(const MDiagram& m, int k) {
    std::vector<Matching> layers;
    for (const auto& layer : m.layers())
        layers.push_back(rotate(layer, k));
    return MDiagram(m.boundary_size(), std::move(layers));
}

std::string format_layers(const MDiagram& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.layers().size(); ++i) {
        out << "layer " << i + 1 << ":";
        for (const auto& arc : m.layers()[i].arcs())
            out << " (" << arc.a << "," << arc.b << ")";
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Partitions of the boundary

BoundaryPartition canonical_partition(BoundaryPartition blocks) {
    for (auto& block : blocks)
        std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

BoundaryPartition rotate(const BoundaryPartition& blocks, int n, int k) {
    BoundaryPartition out = blocks;
    for (auto& block : out)
        for (int& p : block)
            p = rotate_point(p, n, k);
    return canonical_partition(std::move(out));
}

BoundaryPartition rotation_class_key(const BoundaryPartition& blocks, int n) {
    BoundaryPartition best = canonical_partition(blocks);
    for (int k = 1; k < n; ++k)
        best = std::min(best, rotate(blocks, n, k));
    return best;
}

// ---------------------------------------------------------------------------
// Components

ComponentDecomposition decompose(const MDiagram& m) {
    const auto& arcs = m.arcs();
    DisjointSet sets(arcs.size());
    std::map<int, std::size_t> first_arc_at;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (int p : {arcs[i].a, arcs[i].b}) {
            auto [it, inserted] = first_arc_at.emplace(p, i);
            if (!inserted)
                sets.unite(it->second, i);
        }
        for (std::size_t j = 0; j < i; ++j)
            if (crosses(arcs[i], arcs[j]))
                sets.unite(i, j);
    }

    std::map<std::size_t, std::vector<Arc>> classes;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        classes[sets.find(i)].push_back(arcs[i]);

    std::vector<std::vector<Arc>> components;
    for (auto& [root, members] : classes)
        components.push_back(std::move(members));
    std::sort(components.begin(), components.end(), [](const auto& x, const auto& y) {
        return endpoints_of(x).front() < endpoints_of(y).front();
    });

    ComponentDecomposition out;
    for (auto& comp : components) {
        out.boundary_sets.push_back(endpoints_of(comp));
        out.uniform.push_back(is_uniform(comp));
        out.components.push_back(std::move(comp));
    }
    return out;
}

bool is_subdiagram(const MDiagram& m, std::span<const Arc> arcs) {
    if (arcs.empty())
        throw DomainError("a sub-diagram must contain at least one arc");
    const auto chosen = sorted_arcs(arcs);
    const auto& all = m.arcs();
    for (const auto& arc : chosen)
        if (!std::binary_search(all.begin(), all.end(), arc))
            throw DomainError("arc (" + std::to_string(arc.a) + "," + std::to_string(arc.b) +
                              ") is not in the diagram");
    std::set<Arc> inside(chosen.begin(), chosen.end());
    if (inside.size() == all.size())
        return false;
    const auto pts = endpoints_of(chosen);
    for (const auto& arc : all) {
        if (inside.count(arc))
            continue;
        if (std::binary_search(pts.begin(), pts.end(), arc.a) || std::binary_search(pts.begin(), pts.end(), arc.b))
            return false;
        for (const auto& in : inside)
            if (crosses(arc, in))
                return false;
    }
    return true;
}

bool is_uniform(std::span<const Arc> arcs) {
    if (arcs.empty())
        throw DomainError("uniformity is defined for nonempty arc sets");
    const auto pts = endpoints_of(arcs);
    return pts.back() - pts.front() + 1 == static_cast<int>(pts.size());
}

std::optional<int> subdiagram_equivalent(std::span<const Arc> c1, std::span<const Arc> c2, int n) {
    const auto target = sorted_arcs(c2);
    for (int k = 0; k < n; ++k) {
        std::vector<Arc> moved;
        moved.reserve(c1.size());
        for (const auto& arc : c1)
            moved.push_back(rotate(arc, n, k));
        std::sort(moved.begin(), moved.end());
        if (moved == target)
            return k;
    }
    return std::nullopt;
}

BoundaryPartition partition_signature(const MDiagram& m) {
    return canonical_partition(decompose(m).boundary_sets);
}

} // namespace tableau_orbits
