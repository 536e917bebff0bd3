#include "xpoly/symmetry.hpp"

namespace xpoly {

SymmetryAttestation attest(const TwoComplex& c) {
    if (c.empty()) {
        throw InputError("cannot attest an empty complex");
    }
    const int n = c.modulus().value();
    SymmetryAttestation att;
    att.order = n;
    att.shift_invariant = c.shifted(1).triangles() == c.triangles();
    att.vertex_set_full = static_cast<int>(c.vertices().size()) == n;
    // The shift generates all of Z_n, so invariance plus a full vertex set
    // puts every vertex in one orbit.
    att.vertex_transitive = att.shift_invariant && att.vertex_set_full;
    return att;
}

} // namespace xpoly
