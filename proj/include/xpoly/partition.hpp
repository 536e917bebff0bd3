#pragma once

// Construction and verification of partitions of a skeleton's triangle set
// into cyclically symmetric blocks: closed-form groupings for the cross
// polytope and the simplex, an exact-cover search fallback, and a verifier
// for externally supplied block lists.

#include <optional>
#include <set>
#include <vector>

#include "xpoly/surface.hpp"
#include "xpoly/symmetry.hpp"

namespace xpoly {

struct PartitionBlock {
    std::vector<DifferenceCycle> cycles; // sorted
    TwoComplex complex;
    SurfaceCertificate certificate;
    SymmetryAttestation symmetry;
};

/// The common classification of a block's components, or nullopt when the
/// components disagree.
std::optional<SurfaceClass> block_class(const PartitionBlock& b);

/// Coverage evidence: disjoint block triangles, all inside the skeleton,
/// totalling the skeleton's closed-form triangle count, which together pin
/// down that every skeleton triangle lies in exactly one block.
struct CoverageProof {
    long long skeleton_triangles = 0;
    long long block_triangles = 0;
    bool disjoint = false;
    bool inside_skeleton = false;

    bool complete() const {
        return disjoint && inside_skeleton && block_triangles == skeleton_triangles;
    }
};

struct Partition {
    SkeletonSpec spec;
    std::vector<PartitionBlock> blocks;
    CoverageProof coverage;
};

using ClassPolicy = std::set<SurfaceClass>;

/// Acceptance policy for cross polytope blocks: closed surfaces of genus
/// <= 1, counting the nonorientable genus in halves (sphere, torus, Klein
/// bottle, projective plane).
const ClassPolicy& cross_policy();

/// Acceptance policy for simplex blocks: tori and Moebius strips.
const ClassPolicy& simplex_policy();

const ClassPolicy& policy_for(const SkeletonSpec& spec);

/// Partition of the cross polytope 2-skeleton, k >= 3: one block per chiral
/// mirror pair plus boundary-matched achiral blocks {(a:a:2k-2a),
/// (k-a:k-a:2a)} for 1 <= a < k/2.  Every connected component of every
/// block must satisfy cross_policy(); on failure the exact-cover search is
/// tried before a ConstructionError is thrown.
Partition cross_partition(int k);

/// Partition of the simplex 2-skeleton for k = 1, 5 (mod 6), k >= 5: one
/// torus block per chiral mirror pair and one Moebius block per achiral
/// cycle.  Throws InputError for ineligible k.
Partition simplex_partition(int k);

/// Exact-cover backtracking over groupings of the skeleton's difference
/// cycles into blocks whose certificates satisfy the policy.  Deterministic;
/// smaller blocks are preferred.  Guarded to at most 64 cycles.
Partition search_partition(const SkeletonSpec& spec, const ClassPolicy& policy);

/// Rebuilds, certifies and coverage-checks an externally supplied partition.
/// Returns a fully attested Partition or throws VerifyError naming the
/// offending block and property.
Partition verify_partition(const SkeletonSpec& spec,
                           const std::vector<std::vector<DifferenceCycle>>& blocks);

} // namespace xpoly
