#pragma once

// Explicit pure 2-complexes assembled from difference cycles: triangle set,
// edge incidence, vertex links, connected components.

#include <map>
#include <vector>

#include "xpoly/difference_cycle.hpp"

namespace xpoly {

/// An edge on Z_n, stored as a sorted pair of distinct residues.
struct Edge {
    std::array<int, 2> v{};

    Edge() = default;
    Edge(int x, int y);

    auto operator<=>(const Edge&) const = default;
};

/// The difference class of an edge: min(y-x, n-(y-x)).
int difference_class(const Edge& e, Modulus n);

/// The link of a vertex v: neighbors of v, with one link edge {x, y} for
/// each triangle {v, x, y}.
struct VertexLink {
    int vertex = 0;
    std::vector<int> neighbors;    // sorted
    std::vector<Edge> edges;       // sorted; size = number of triangles at v
};

class TwoComplex {
public:
    /// Assembles the union of the given cycles' orbits.  The cycles must be
    /// pairwise distinct and share the modulus n; their orbits are disjoint
    /// by construction.
    static TwoComplex from_cycles(Modulus n, std::vector<DifferenceCycle> cycles);

    /// Wraps an explicit triangle list (deduplicated); used for component
    /// restrictions and externally supplied complexes.
    static TwoComplex from_triangles(Modulus n, std::vector<Triangle> triangles);

    Modulus modulus() const { return n_; }
    /// Generating cycles when built by from_cycles, empty otherwise.
    const std::vector<DifferenceCycle>& cycles() const { return cycles_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    /// Edge -> indices into triangles() of the incident triangles.
    const std::map<Edge, std::vector<int>>& edges() const { return edges_; }
    /// Residues actually used, sorted.
    const std::vector<int>& vertices() const { return vertices_; }

    bool empty() const { return triangles_.empty(); }
    int edge_degree(const Edge& e) const;

    VertexLink link(int v) const;

    /// Connected components under shared vertices; their triangle sets
    /// partition triangles().
    std::vector<TwoComplex> components() const;

    /// The complex relabeled by i -> i+s mod n.
    TwoComplex shifted(int s) const;

private:
    TwoComplex(Modulus n, std::vector<DifferenceCycle> cycles, std::vector<Triangle> triangles);

    Modulus n_;
    std::vector<DifferenceCycle> cycles_;
    std::vector<Triangle> triangles_;
    std::map<Edge, std::vector<int>> edges_;
    std::vector<int> vertices_;
};

} // namespace xpoly
