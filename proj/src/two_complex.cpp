#include "xpoly/two_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace xpoly {

Edge::Edge(int x, int y) : v{std::min(x, y), std::max(x, y)} {
    if (x == y) {
        throw InputError("edge endpoints must be distinct");
    }
}

int difference_class(const Edge& e, Modulus n) {
    const int d = e.v[1] - e.v[0];
    return std::min(d, n.value() - d);
}

TwoComplex::TwoComplex(Modulus n, std::vector<DifferenceCycle> cycles,
                       std::vector<Triangle> triangles)
    : n_(n), cycles_(std::move(cycles)), triangles_(std::move(triangles)) {
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());

    std::set<int> verts;
    for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
        const auto& tri = triangles_[static_cast<std::size_t>(t)];
        edges_[Edge(tri.v[0], tri.v[1])].push_back(t);
        edges_[Edge(tri.v[0], tri.v[2])].push_back(t);
        edges_[Edge(tri.v[1], tri.v[2])].push_back(t);
        verts.insert(tri.v.begin(), tri.v.end());
    }
    vertices_.assign(verts.begin(), verts.end());
}

TwoComplex TwoComplex::from_cycles(Modulus n, std::vector<DifferenceCycle> cycles) {
    std::sort(cycles.begin(), cycles.end());
    for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
        if (cycles[i] == cycles[i + 1]) {
            throw InputError("duplicate cycle " + to_string(cycles[i]));
        }
    }
    std::vector<Triangle> tris;
    for (const DifferenceCycle& dc : cycles) {
        if (dc.modulus() != n) {
            throw InputError("modulus mismatch: cycle " + to_string(dc) + " is mod " +
                             std::to_string(dc.modulus().value()) + ", complex is mod " +
                             std::to_string(n.value()));
        }
        const auto orbit = expand(dc);
        tris.insert(tris.end(), orbit.begin(), orbit.end());
    }
    return TwoComplex(n, std::move(cycles), std::move(tris));
}

TwoComplex TwoComplex::from_triangles(Modulus n, std::vector<Triangle> triangles) {
    for (const Triangle& t : triangles) {
        if (t.v[0] < 0 || t.v[2] >= n.value()) {
            throw InputError("triangle vertex out of range for modulus " +
                             std::to_string(n.value()));
        }
    }
    return TwoComplex(n, {}, std::move(triangles));
}

int TwoComplex::edge_degree(const Edge& e) const {
    const auto it = edges_.find(e);
    return it == edges_.end() ? 0 : static_cast<int>(it->second.size());
}

VertexLink TwoComplex::link(int v) const {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
        throw InputError("unknown vertex " + std::to_string(v));
    }
    VertexLink lk;
    lk.vertex = v;
    std::set<int> nbrs;
    for (const Triangle& t : triangles_) {
        if (t.v[0] == v) {
            lk.edges.emplace_back(t.v[1], t.v[2]);
        } else if (t.v[1] == v) {
            lk.edges.emplace_back(t.v[0], t.v[2]);
        } else if (t.v[2] == v) {
            lk.edges.emplace_back(t.v[0], t.v[1]);
        } else {
            continue;
        }
        const Edge& e = lk.edges.back();
        nbrs.insert(e.v[0]);
        nbrs.insert(e.v[1]);
    }
    lk.neighbors.assign(nbrs.begin(), nbrs.end());
    std::sort(lk.edges.begin(), lk.edges.end());
    return lk;
}

std::vector<TwoComplex> TwoComplex::components() const {
    // Union-find over the used vertices; triangles connect their vertices,
    // so two triangles land in one component iff they share a vertex chain.
    std::map<int, int> index;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        index[vertices_[i]] = static_cast<int>(i);
    }
    std::vector<int> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    const auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
            parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
        }
    };
    for (const Triangle& t : triangles_) {
        unite(index[t.v[0]], index[t.v[1]]);
        unite(index[t.v[0]], index[t.v[2]]);
    }

    std::map<int, std::vector<Triangle>> groups;
    for (const Triangle& t : triangles_) {
        groups[find(index[t.v[0]])].push_back(t);
    }
    std::vector<TwoComplex> out;
    out.reserve(groups.size());
    for (auto& [root, tris] : groups) {
        out.push_back(TwoComplex::from_triangles(n_, std::move(tris)));
    }
    return out;
}

TwoComplex TwoComplex::shifted(int s) const {
    std::vector<Triangle> tris;
    tris.reserve(triangles_.size());
    for (const Triangle& t : triangles_) {
        tris.push_back(t.shifted(s, n_));
    }
    TwoComplex c = TwoComplex::from_triangles(n_, std::move(tris));
    c.cycles_ = cycles_; // the orbit index set is shift-invariant
    return c;
}

} // namespace xpoly
