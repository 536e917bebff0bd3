#pragma once

// Attestations of cyclic symmetry: shift invariance of a complex under
// i -> i+1 and vertex transitivity of the resulting Z_n-action.

#include "xpoly/two_complex.hpp"

namespace xpoly {

struct SymmetryAttestation {
    bool shift_invariant = false;  // i -> i+1 maps the triangle set to itself
    bool vertex_set_full = false;  // vertex set = all of Z_n
    bool vertex_transitive = false;
    int order = 0;                 // order of the acting group, = n
};

/// Checks shift invariance by explicit relabeling and set comparison, never
/// by construction.  Throws InputError on an empty complex.
SymmetryAttestation attest(const TwoComplex& c);

} // namespace xpoly
