#pragma once

#include "tableau_orbits/tableau.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tableau_orbits {

/// Arc between boundary points a <= b of the line 1..n.
struct Arc {
    int a = 0;
    int b = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

Arc make_arc(int x, int y);
/// a < c < b < d after normalisation. Arcs sharing an endpoint never cross.
bool crosses(const Arc& x, const Arc& y);

/// Rotation i -> i-1 (mod n) on 1..n, applied k times; 1 goes to n.
int rotate_point(int p, int n, int k = 1);
Arc rotate(const Arc& arc, int n, int k = 1);

/// Arcs on 1..n, each point on at most one arc. Arcs are kept sorted.
class Matching {
public:
    Matching() = default;
    Matching(int n, std::vector<Arc> arcs);

    int boundary_size() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }

    bool is_perfect() const;
    bool is_crossing() const;
    bool is_noncrossing() const { return !is_crossing(); }
    bool has_repetition() const;
    /// Every point strictly below an arc lies on an arc.
    bool is_standard() const;
    /// As is_standard, but only points in `points` are required to lie on arcs.
    bool is_standard_on(std::span<const int> points) const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

Matching rotate(const Matching& m, int k = 1);

/// A union of noncrossing matchings over 1..n, kept layer by layer.
class MDiagram {
public:
    MDiagram() = default;
    MDiagram(int n, std::vector<Matching> layers);

    int boundary_size() const { return n_; }
    const std::vector<Matching>& layers() const { return layers_; }
    /// Union of the layers, each arc once, sorted.
    const std::vector<Arc>& arcs() const { return arcs_; }

    friend bool operator==(const MDiagram&, const MDiagram&) = default;

private:
    int n_ = 0;
    std::vector<Matching> layers_;
    std::vector<Arc> arcs_;
};

/// The m-diagram of a standard tableau: layer i matches the entries of row i+1,
/// in increasing order, each to the largest still unmatched smaller entry of row i.
MDiagram build_mdiagram(const Tableau& t);
MDiagram rotate(const MDiagram& m, int k = 1);

/// `layer i: (a,b) (c,d) ...` lines, layers numbered from 1.
std::string format_layers(const MDiagram& m);

/// Set partition of boundary points: blocks sorted ascending, ordered by minimum.
using BoundaryPartition = std::vector<std::vector<int>>;

BoundaryPartition canonical_partition(BoundaryPartition blocks);
BoundaryPartition rotate(const BoundaryPartition& blocks, int n, int k = 1);
/// Least canonical encoding among all rotations; equal iff rotation-equivalent.
BoundaryPartition rotation_class_key(const BoundaryPartition& blocks, int n);

struct ComponentDecomposition {
    std::vector<std::vector<Arc>> components;  // ordered by smallest endpoint
    BoundaryPartition boundary_sets;
    std::vector<bool> uniform;
};

/// Components are the classes of the relation "shares an endpoint or crosses",
/// closed transitively over all arcs of the diagram.
ComponentDecomposition decompose(const MDiagram& m);

/// Nonempty proper arc subset closed under shared endpoints, and crossed by no
/// arc outside it.
bool is_subdiagram(const MDiagram& m, std::span<const Arc> arcs);
/// Endpoints form a run of consecutive integers.
bool is_uniform(std::span<const Arc> arcs);
/// Least N in [0, n) with rho^N(c1) = c2.
std::optional<int> subdiagram_equivalent(std::span<const Arc> c1, std::span<const Arc> c2, int n);

/// Boundary sets of the components, in canonical form.
BoundaryPartition partition_signature(const MDiagram& m);

/// Deterministic SVG drawing: points at x = 1..n, arcs as upper semicircles,
/// one stroke colour per component.
std::string render_svg(const MDiagram& m);

} // namespace tableau_orbits
