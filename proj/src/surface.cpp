#include "xpoly/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace xpoly {

std::string to_string(SurfaceClass cls) {
    switch (cls) {
    case SurfaceClass::Sphere: return "Sphere";
    case SurfaceClass::Torus: return "Torus";
    case SurfaceClass::KleinBottle: return "KleinBottle";
    case SurfaceClass::ProjectivePlane: return "ProjectivePlane";
    case SurfaceClass::MoebiusStrip: return "MoebiusStrip";
    case SurfaceClass::Annulus: return "Annulus";
    case SurfaceClass::Disk: return "Disk";
    case SurfaceClass::Other: return "Other";
    }
    return "Other";
}

SurfaceClass classify_surface(int chi, bool orientable, int boundary) {
    if (boundary == 0) {
        if (orientable) {
            if (chi == 2) return SurfaceClass::Sphere;
            if (chi == 0) return SurfaceClass::Torus;
        } else {
            if (chi == 1) return SurfaceClass::ProjectivePlane;
            if (chi == 0) return SurfaceClass::KleinBottle;
        }
        return SurfaceClass::Other;
    }
    if (orientable) {
        if (chi == 1 && boundary == 1) return SurfaceClass::Disk;
        if (chi == 0 && boundary == 2) return SurfaceClass::Annulus;
        return SurfaceClass::Other;
    }
    if (chi == 0 && boundary == 1) return SurfaceClass::MoebiusStrip;
    return SurfaceClass::Other;
}

bool SurfaceCertificate::all_surface() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentCertificate& c) { return c.is_surface(); });
}

bool SurfaceCertificate::all_closed() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentCertificate& c) { return c.is_closed; });
}

int SurfaceCertificate::euler_characteristic() const {
    int chi = 0;
    for (const ComponentCertificate& c : components) {
        chi += c.euler_characteristic;
    }
    return chi;
}

bool SurfaceCertificate::all_components_in(const std::set<SurfaceClass>& policy) const {
    return std::all_of(components.begin(), components.end(),
                       [&](const ComponentCertificate& c) {
                           return c.is_surface() && policy.count(c.classification) > 0;
                       });
}

namespace {

// Traversal direction of edge e induced by the reference orientation of the
// sorted triangle (a, b, c): the cycle a->b->c->a runs the edges {a,b} and
// {b,c} low-to-high and {a,c} high-to-low.
int base_direction(const Triangle& t, const Edge& e) {
    if (e.v[0] == t.v[0] && e.v[1] == t.v[2]) {
        return -1;
    }
    return 1;
}

bool links_single_cycle_or_path(const TwoComplex& c) {
    for (const int v : c.vertices()) {
        const VertexLink lk = c.link(v);
        std::map<int, std::vector<int>> adj; // link vertex -> incident link edges
        for (std::size_t i = 0; i < lk.edges.size(); ++i) {
            adj[lk.edges[i].v[0]].push_back(static_cast<int>(i));
            adj[lk.edges[i].v[1]].push_back(static_cast<int>(i));
        }
        int endpoints = 0;
        for (const auto& [x, inc] : adj) {
            if (inc.size() == 1) {
                ++endpoints;
            } else if (inc.size() != 2) {
                return false; // branch point: edge {v,x} lies in >2 triangles
            }
        }
        if (endpoints != 0 && endpoints != 2) {
            return false;
        }
        // Connectivity: one walk must reach every link edge.
        std::vector<bool> seen(lk.edges.size(), false);
        std::deque<int> queue{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const int e = queue.front();
            queue.pop_front();
            for (const int x : {lk.edges[static_cast<std::size_t>(e)].v[0],
                                lk.edges[static_cast<std::size_t>(e)].v[1]}) {
                for (const int f : adj[x]) {
                    if (!seen[static_cast<std::size_t>(f)]) {
                        seen[static_cast<std::size_t>(f)] = true;
                        ++reached;
                        queue.push_back(f);
                    }
                }
            }
        }
        if (reached != lk.edges.size()) {
            return false; // several cycles/paths meet at v
        }
    }
    return true;
}

ComponentCertificate certify_component(const TwoComplex& comp) {
    ComponentCertificate cert;
    cert.vertex_count = static_cast<int>(comp.vertices().size());
    cert.edge_count = static_cast<int>(comp.edges().size());
    cert.triangle_count = static_cast<int>(comp.triangles().size());
    cert.euler_characteristic = cert.vertex_count - cert.edge_count + cert.triangle_count;

    cert.is_pseudomanifold = true;
    cert.is_closed = true;
    for (const auto& [edge, incident] : comp.edges()) {
        if (incident.size() > 2) {
            cert.is_pseudomanifold = false;
        }
        if (incident.size() != 2) {
            cert.is_closed = false;
        }
    }

    cert.links_ok = cert.is_pseudomanifold && links_single_cycle_or_path(comp);

    if (cert.is_pseudomanifold) {
        const auto cycles = boundary_cycles(comp);
        cert.boundary_components = static_cast<int>(cycles.size());
        for (const auto& cycle : cycles) {
            cert.boundary_cycle_lengths.push_back(static_cast<int>(cycle.size()));
        }
        std::sort(cert.boundary_cycle_lengths.begin(), cert.boundary_cycle_lengths.end());
    }

    if (cert.is_surface()) {
        cert.orientable = orientable_by_propagation(comp);
        const int chi = cert.euler_characteristic;
        const int b = cert.boundary_components;
        cert.genus = *cert.orientable ? (2 - chi - b) / 2 : (2 - chi - b);
        cert.classification = classify_surface(chi, *cert.orientable, b);
    } else {
        cert.classification = SurfaceClass::Other;
    }
    return cert;
}

} // namespace

SurfaceCertificate certify(const TwoComplex& c) {
    if (c.empty()) {
        throw InputError("cannot certify an empty complex");
    }
    SurfaceCertificate cert;
    for (const TwoComplex& comp : c.components()) {
        cert.components.push_back(certify_component(comp));
    }
    return cert;
}

std::optional<bool> orientable_by_propagation(const TwoComplex& c) {
    for (const auto& [edge, incident] : c.edges()) {
        if (incident.size() > 2) {
            return std::nullopt;
        }
    }
    const auto& tris = c.triangles();
    std::vector<int> sign(tris.size(), 0);
    for (std::size_t seed = 0; seed < tris.size(); ++seed) {
        if (sign[seed] != 0) {
            continue;
        }
        sign[seed] = 1;
        std::deque<std::size_t> queue{seed};
        while (!queue.empty()) {
            const std::size_t t = queue.front();
            queue.pop_front();
            const Triangle& tri = tris[t];
            for (const Edge e : {Edge(tri.v[0], tri.v[1]), Edge(tri.v[0], tri.v[2]),
                                 Edge(tri.v[1], tri.v[2])}) {
                const auto& incident = c.edges().at(e);
                if (incident.size() != 2) {
                    continue; // propagation crosses interior edges only
                }
                const std::size_t other = static_cast<std::size_t>(
                    incident[0] == static_cast<int>(t) ? incident[1] : incident[0]);
                // Opposite traversal of the shared edge forces the sign.
                const int needed =
                    -sign[t] * base_direction(tri, e) * base_direction(tris[other], e);
                if (sign[other] == 0) {
                    sign[other] = needed;
                    queue.push_back(other);
                } else if (sign[other] != needed) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<std::vector<Edge>> boundary_cycles(const TwoComplex& c) {
    std::map<int, std::vector<Edge>> at; // vertex -> incident degree-1 edges, sorted
    std::vector<Edge> boundary;
    for (const auto& [edge, incident] : c.edges()) {
        if (incident.size() > 2) {
            std::ostringstream msg;
            msg << "not a pseudomanifold: edge {" << edge.v[0] << ", " << edge.v[1]
                << "} lies in " << incident.size() << " triangles";
            throw VerifyError(msg.str());
        }
        if (incident.size() == 1) {
            boundary.push_back(edge);
            at[edge.v[0]].push_back(edge);
            at[edge.v[1]].push_back(edge);
        }
    }

    // Every vertex meets an even number of boundary edges (the degree-1 link
    // vertices at v are path endpoints and come in pairs), so walking along
    // unused boundary edges closes up at the start vertex.
    std::set<Edge> used;
    std::vector<std::vector<Edge>> cycles;
    for (const Edge& start : boundary) {
        if (used.count(start)) {
            continue;
        }
        std::vector<Edge> cycle;
        int origin = start.v[0];
        int here = origin;
        Edge e = start;
        while (true) {
            used.insert(e);
            cycle.push_back(e);
            here = (e.v[0] == here) ? e.v[1] : e.v[0];
            if (here == origin) {
                break;
            }
            const auto& candidates = at[here];
            const Edge* next = nullptr;
            for (const Edge& cand : candidates) {
                if (!used.count(cand)) {
                    next = &cand;
                    break;
                }
            }
            if (next == nullptr) {
                break; // unreachable: boundary degrees are even at every vertex
            }
            e = *next;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

bool is_subcomplex_of_skeleton(const TwoComplex& c, const SkeletonSpec& spec) {
    if (c.modulus() != spec.modulus()) {
        throw InputError("modulus mismatch: complex is mod " +
                         std::to_string(c.modulus().value()) + ", skeleton is mod " +
                         std::to_string(spec.modulus().value()));
    }
    return std::all_of(c.triangles().begin(), c.triangles().end(),
                       [&](const Triangle& t) { return spec.contains(t); });
}

} // namespace xpoly
