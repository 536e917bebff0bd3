#pragma once

// Brute-force oracles for the test suites.  Everything here recomputes
// expected values from first principles, independently of the library code
// paths under test: plain subset enumeration, literal orbit listing, and
// exhaustive orientation assignment.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "xpoly/two_complex.hpp"

namespace oracle {

// All 3-subsets of {0, ..., n-1}, sorted.
inline std::vector<std::array<int, 3>> all_triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                out.push_back({x, y, z});
    return out;
}

// 3-subsets of Z_2k containing no antipodal pair {i, i+k}.
inline std::vector<std::array<int, 3>> antipodal_free_triples(int k) {
    const int n = 2 * k;
    std::vector<std::array<int, 3>> out;
    for (const auto& t : all_triples(n)) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = i + 1; j < 3; ++j)
                if ((t[j] - t[i]) == k) { ok = false; break; }
        if (ok) out.push_back(t);
    }
    return out;
}

// The lexicographically least cyclic rotation, computed by explicit listing.
inline std::array<int, 3> least_rotation(int a, int b, int c) {
    std::array<int, 3> best{a, b, c};
    const std::array<int, 3> r1{b, c, a};
    const std::array<int, 3> r2{c, a, b};
    if (r1 < best) best = r1;
    if (r2 < best) best = r2;
    return best;
}

// All canonical gap triples summing to n, via enumeration of every
// composition of n into three positive parts.
inline std::set<std::array<int, 3>> all_canonical_triples(int n) {
    std::set<std::array<int, 3>> out;
    for (int a = 1; a < n; ++a)
        for (int b = 1; a + b < n; ++b)
            out.insert(least_rotation(a, b, n - a - b));
    return out;
}

// The triangle orbit of the gap triple (a, b, c) mod n, by literal listing.
inline std::set<std::array<int, 3>> orbit(int a, int b, int n) {
    std::set<std::array<int, 3>> out;
    for (int i = 0; i < n; ++i) {
        std::array<int, 3> t{i % n, (i + a) % n, (i + a + b) % n};
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

// Orientability by exhaustive search over triangle orientation assignments.
// Complete backtracking in triangle index order; each new assignment is
// checked against every previously assigned triangle that shares an interior
// (degree-2) edge.  Returns true iff some assignment orients every interior
// edge in opposite directions from its two triangles.  The complex must be a
// pseudomanifold.
inline bool exhaustively_orientable(const xpoly::TwoComplex& c) {
    const auto& tris = c.triangles();
    const int f = static_cast<int>(tris.size());

    // Traversal direction of edge e in the sorted triangle t under
    // orientation +1 (cycle v0 -> v1 -> v2 -> v0).
    const auto dir = [](const xpoly::Triangle& t, const xpoly::Edge& e) {
        return (e.v[0] == t.v[0] && e.v[1] == t.v[2]) ? -1 : 1;
    };

    // Pairs of triangles sharing an interior edge, with the sign their
    // orientations must multiply to.
    std::vector<std::vector<std::pair<int, int>>> constraints(
        static_cast<std::size_t>(f)); // later triangle -> (earlier, required product)
    for (const auto& [e, incident] : c.edges()) {
        if (incident.size() != 2) continue;
        const int t1 = std::min(incident[0], incident[1]);
        const int t2 = std::max(incident[0], incident[1]);
        const int product = -dir(tris[static_cast<std::size_t>(t1)], e) *
                            dir(tris[static_cast<std::size_t>(t2)], e);
        constraints[static_cast<std::size_t>(t2)].push_back({t1, product});
    }

    std::vector<int> sign(static_cast<std::size_t>(f), 0);
    const auto consistent = [&](int t) {
        for (const auto& [earlier, product] : constraints[static_cast<std::size_t>(t)]) {
            if (sign[static_cast<std::size_t>(t)] * sign[static_cast<std::size_t>(earlier)] !=
                product) {
                return false;
            }
        }
        return true;
    };
    // Depth-first over all 2^f assignments with early pruning.
    int t = 0;
    while (true) {
        if (t == f) return true;
        if (sign[static_cast<std::size_t>(t)] == 0) {
            sign[static_cast<std::size_t>(t)] = 1;
        } else if (sign[static_cast<std::size_t>(t)] == 1) {
            sign[static_cast<std::size_t>(t)] = -1;
        } else {
            sign[static_cast<std::size_t>(t)] = 0; // both tried, backtrack
            --t;
            if (t < 0) return false;
            continue;
        }
        if (consistent(t)) ++t;
    }
}

// Shift invariance checked against every one of the n shifts.
inline bool shift_invariant_all_shifts(const xpoly::TwoComplex& c) {
    for (int s = 0; s < c.modulus().value(); ++s) {
        if (c.shifted(s).triangles() != c.triangles()) return false;
    }
    return true;
}

// Degree-1 edges by plain recount of triangle incidences.
inline std::vector<xpoly::Edge> boundary_edges_by_recount(const xpoly::TwoComplex& c) {
    std::map<xpoly::Edge, int> count;
    for (const auto& t : c.triangles()) {
        count[xpoly::Edge(t.v[0], t.v[1])] += 1;
        count[xpoly::Edge(t.v[0], t.v[2])] += 1;
        count[xpoly::Edge(t.v[1], t.v[2])] += 1;
    }
    std::vector<xpoly::Edge> out;
    for (const auto& [e, deg] : count) {
        if (deg == 1) out.push_back(e);
    }
    return out;
}

// Grid models built from a fundamental square: rows x cols vertex grid on a
// cylinder, top row glued to the bottom row by the given residue map.
// cols >= 4 and rows >= 2 keep the result simplicial.
inline xpoly::TwoComplex grid_surface(int cols, int rows, bool flip) {
    using xpoly::Triangle;
    const int n = cols * rows;
    const xpoly::Modulus m(n);
    const auto vertex = [&](int col, int row) {
        col = ((col % cols) + cols) % cols;
        if (row < rows) return row * cols + col;
        // top edge: glue to row 0, reflected for the flip gluing
        const int c0 = flip ? ((cols - col) % cols) : col;
        return c0;
    };
    std::vector<Triangle> tris;
    for (int row = 0; row < rows; ++row) {
        for (int col = 0; col < cols; ++col) {
            tris.emplace_back(vertex(col, row), vertex(col + 1, row), vertex(col, row + 1), m);
            tris.emplace_back(vertex(col + 1, row), vertex(col + 1, row + 1),
                              vertex(col, row + 1), m);
        }
    }
    return xpoly::TwoComplex::from_triangles(m, std::move(tris));
}

inline xpoly::TwoComplex grid_torus() { return grid_surface(6, 3, false); }
inline xpoly::TwoComplex grid_klein_bottle() { return grid_surface(6, 3, true); }

} // namespace oracle
