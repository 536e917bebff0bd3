#include "xpoly/skeleton.hpp"

#include <algorithm>
#include <sstream>

namespace xpoly {

std::string to_string(SkeletonKind kind) {
    return kind == SkeletonKind::CrossPolytope ? "cross" : "simplex";
}

SkeletonSpec SkeletonSpec::cross_polytope(int k) {
    if (k < 3) {
        throw InputError("cross polytope requires k >= 3, got " + std::to_string(k));
    }
    return SkeletonSpec(SkeletonKind::CrossPolytope, k);
}

SkeletonSpec SkeletonSpec::simplex(int k) {
    if (k < 4) {
        throw InputError("simplex skeleton requires k >= 4, got " + std::to_string(k));
    }
    return SkeletonSpec(SkeletonKind::Simplex, k);
}

Modulus SkeletonSpec::modulus() const {
    return Modulus(kind_ == SkeletonKind::CrossPolytope ? 2 * k_ : k_);
}

bool SkeletonSpec::decomposition_eligible() const {
    if (kind_ == SkeletonKind::CrossPolytope) {
        return true;
    }
    const int r = k_ % 6;
    return k_ >= 5 && (r == 1 || r == 5);
}

long long SkeletonSpec::triangle_count() const {
    const long long m = modulus().value();
    const long long all = m * (m - 1) * (m - 2) / 6;
    if (kind_ == SkeletonKind::Simplex) {
        return all;
    }
    // Each of the k antipodal pairs sits in 2k-2 triangles, and no triangle
    // contains two antipodal pairs.
    return all - static_cast<long long>(k_) * (2 * k_ - 2);
}

std::vector<DifferenceCycle> SkeletonSpec::cycles() const {
    return kind_ == SkeletonKind::CrossPolytope ? cross_cycles(k_) : simplex_cycles(k_);
}

bool SkeletonSpec::contains(const Triangle& t) const {
    if (kind_ == SkeletonKind::Simplex) {
        return true;
    }
    const int n = 2 * k_;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const int d = t.v[j] - t.v[i];
            if (std::min(d, n - d) == k_) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<int, int>> antipodal_pairs(int k) {
    if (k < 3) {
        throw InputError("cross polytope requires k >= 3, got " + std::to_string(k));
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        pairs.emplace_back(i, i + k);
    }
    return pairs;
}

std::string vertex_labeling_convention(int k) {
    if (k < 3) {
        throw InputError("cross polytope requires k >= 3, got " + std::to_string(k));
    }
    std::ostringstream os;
    os << "vertices are Z_" << 2 * k << " = {0, ..., " << 2 * k - 1
       << "}; antipodal pairs are {i, i+" << k
       << "}; the shift i -> i+1 preserves antipodality";
    return os.str();
}

std::vector<DifferenceCycle> cross_cycles(int k) {
    if (k < 3) {
        throw InputError("cross polytope requires k >= 3, got " + std::to_string(k));
    }
    std::vector<DifferenceCycle> out;
    for (const DifferenceCycle& dc : enumerate_all(Modulus(2 * k))) {
        const auto& g = dc.gaps();
        if (g[0] != k && g[1] != k && g[2] != k) {
            out.push_back(dc);
        }
    }
    return out;
}

std::vector<DifferenceCycle> simplex_cycles(int k) {
    if (k < 4) {
        throw InputError("simplex skeleton requires k >= 4, got " + std::to_string(k));
    }
    return enumerate_all(Modulus(k));
}

} // namespace xpoly
