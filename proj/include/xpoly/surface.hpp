#pragma once

// Surface recognition and classification for pure 2-complexes: edge-degree
// (pseudomanifold) checks, vertex-link checks, Euler characteristic,
// orientability by orientation propagation, boundary structure, genus, and
// a named class per connected component.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xpoly/skeleton.hpp"
#include "xpoly/two_complex.hpp"

namespace xpoly {

enum class SurfaceClass {
    Sphere,
    Torus,
    KleinBottle,
    ProjectivePlane,
    MoebiusStrip,
    Annulus,
    Disk,
    Other,
};

std::string to_string(SurfaceClass cls);

/// Classification of compact connected surfaces from the certificate data.
/// Anything beyond genus <= 1 closed surfaces, disks, annuli and Moebius
/// strips is reported as Other.
SurfaceClass classify_surface(int euler_characteristic, bool orientable,
                              int boundary_components);

/// Verification record for one connected component.
struct ComponentCertificate {
    int vertex_count = 0;
    int edge_count = 0;
    int triangle_count = 0;
    bool is_pseudomanifold = false; // every edge degree <= 2
    bool is_closed = false;         // every edge degree = 2
    bool links_ok = false;          // every vertex link a single cycle or path
    int euler_characteristic = 0;   // V - E + F
    std::optional<bool> orientable; // unset when the component is not a surface
    int boundary_components = 0;
    std::vector<int> boundary_cycle_lengths; // sorted
    std::optional<int> genus;       // unset when the component is not a surface
    SurfaceClass classification = SurfaceClass::Other;

    bool is_surface() const { return is_pseudomanifold && links_ok; }
};

struct SurfaceCertificate {
    std::vector<ComponentCertificate> components;

    bool all_surface() const;
    bool all_closed() const;
    /// Sum of the per-component Euler characteristics.
    int euler_characteristic() const;
    /// True iff every component is a surface whose class lies in the policy.
    bool all_components_in(const std::set<SurfaceClass>& policy) const;
};

/// Certifies every connected component of c.  Throws InputError on an empty
/// complex.
SurfaceCertificate certify(const TwoComplex& c);

/// Orientability decided by propagating a triangle orientation across
/// interior (degree-2) edges, demanding opposite traversal of the shared
/// edge.  Unset when c has an edge of degree > 2.  Empty complexes and
/// complexes with boundary are handled; the result covers all components.
std::optional<bool> orientable_by_propagation(const TwoComplex& c);

/// The degree-1 edges decomposed into closed cycles (deterministic walk,
/// smallest continuation first).  Throws VerifyError when c is not a
/// pseudomanifold.
std::vector<std::vector<Edge>> boundary_cycles(const TwoComplex& c);

/// True iff every triangle of c is a triangle of the skeleton.  Throws
/// InputError when the moduli differ.
bool is_subcomplex_of_skeleton(const TwoComplex& c, const SkeletonSpec& spec);

} // namespace xpoly
