#pragma once

// Triangle sets of the two skeleton families: the 2-skeleton of the
// k-dimensional cross polytope (vertices Z_2k, antipodal pairs {i, i+k})
// and the 2-skeleton of the (k-1)-simplex (vertices Z_k).

#include <string>
#include <utility>
#include <vector>

#include "xpoly/difference_cycle.hpp"

namespace xpoly {

enum class SkeletonKind { CrossPolytope, Simplex };

std::string to_string(SkeletonKind kind);

class SkeletonSpec {
public:
    static SkeletonSpec cross_polytope(int k); // requires k >= 3
    static SkeletonSpec simplex(int k);        // requires k >= 4

    SkeletonKind kind() const { return kind_; }
    int k() const { return k_; }
    Modulus modulus() const;

    /// For the simplex family: whether the decomposition into tori and
    /// Moebius strips applies (k = 1 or 5 mod 6).  Always true for the
    /// cross polytope.
    bool decomposition_eligible() const;

    /// Number of triangles: C(2k,3) - k(2k-2) for the cross polytope
    /// (3-subsets avoiding antipodal pairs), C(k,3) for the simplex.
    long long triangle_count() const;

    /// Difference cycles indexing the skeleton's triangle orbits, sorted.
    std::vector<DifferenceCycle> cycles() const;

    /// True iff t is a triangle of the skeleton (for the cross polytope:
    /// contains no antipodal pair).
    bool contains(const Triangle& t) const;

    friend auto operator<=>(const SkeletonSpec&, const SkeletonSpec&) = default;

private:
    SkeletonSpec(SkeletonKind kind, int k) : kind_(kind), k_(k) {}

    SkeletonKind kind_;
    int k_;
};

/// Antipodal vertex pairs {i, i+k} of the cross polytope labeling.
std::vector<std::pair<int, int>> antipodal_pairs(int k);

/// One-line statement of the vertex labeling used for the cross polytope,
/// suitable for report headers.
std::string vertex_labeling_convention(int k);

/// Canonical difference cycles mod 2k with no gap equal to k, sorted.  A
/// triangle lies in the cross polytope iff its gap triple avoids k.
std::vector<DifferenceCycle> cross_cycles(int k);

/// All canonical difference cycles mod k (every 3-subset of Z_k is a
/// simplex triangle), sorted.
std::vector<DifferenceCycle> simplex_cycles(int k);

} // namespace xpoly
