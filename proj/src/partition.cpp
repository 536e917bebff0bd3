#include "xpoly/partition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace xpoly {

std::optional<SurfaceClass> block_class(const PartitionBlock& b) {
    if (b.certificate.components.empty()) {
        return std::nullopt;
    }
    const SurfaceClass first = b.certificate.components.front().classification;
    for (const ComponentCertificate& comp : b.certificate.components) {
        if (comp.classification != first) {
            return std::nullopt;
        }
    }
    return first;
}

const ClassPolicy& cross_policy() {
    // Closed surfaces with chi >= 0, i.e. genus <= 1 with the nonorientable
    // genus counted in halves (Klein bottle 1, projective plane 1/2).  Klein
    // bottles are unavoidable: whenever v2(a) > v2(k) the strip (a:a:2k-2a)
    // splits into Moebius components, so every closed block containing it is
    // nonorientable.
    static const ClassPolicy policy{SurfaceClass::Sphere, SurfaceClass::Torus,
                                    SurfaceClass::KleinBottle,
                                    SurfaceClass::ProjectivePlane};
    return policy;
}

const ClassPolicy& simplex_policy() {
    static const ClassPolicy policy{SurfaceClass::Torus, SurfaceClass::MoebiusStrip};
    return policy;
}

const ClassPolicy& policy_for(const SkeletonSpec& spec) {
    return spec.kind() == SkeletonKind::CrossPolytope ? cross_policy() : simplex_policy();
}

namespace {

unsigned certification_threads() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("XPOLY_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            cap = static_cast<unsigned>(std::min<long>(v, 256));
        }
    }
    return cap;
}

PartitionBlock make_block(Modulus n, std::vector<DifferenceCycle> cycles) {
    std::sort(cycles.begin(), cycles.end());
    TwoComplex complex = TwoComplex::from_cycles(n, cycles);
    return PartitionBlock{std::move(cycles), std::move(complex), {}, {}};
}

void certify_blocks(std::vector<PartitionBlock>& blocks) {
    const std::size_t workers =
        std::min<std::size_t>(certification_threads(), blocks.size());
    if (workers <= 1) {
        for (PartitionBlock& b : blocks) {
            b.certificate = certify(b.complex);
            b.symmetry = attest(b.complex);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto run = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= blocks.size()) {
                return;
            }
            try {
                blocks[i].certificate = certify(blocks[i].complex);
                blocks[i].symmetry = attest(blocks[i].complex);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(run);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

void sort_blocks(std::vector<PartitionBlock>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const PartitionBlock& x, const PartitionBlock& y) {
                  return x.cycles < y.cycles;
              });
}

CoverageProof prove_coverage(const SkeletonSpec& spec,
                             const std::vector<PartitionBlock>& blocks) {
    CoverageProof proof;
    proof.skeleton_triangles = spec.triangle_count();
    proof.inside_skeleton = true;
    std::vector<Triangle> all;
    for (const PartitionBlock& b : blocks) {
        for (const Triangle& t : b.complex.triangles()) {
            all.push_back(t);
            if (!spec.contains(t)) {
                proof.inside_skeleton = false;
            }
        }
    }
    proof.block_triangles = static_cast<long long>(all.size());
    std::sort(all.begin(), all.end());
    proof.disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    return proof;
}

std::string render_cycles(const std::vector<DifferenceCycle>& cycles) {
    std::string out;
    for (const DifferenceCycle& dc : cycles) {
        if (!out.empty()) {
            out += " ";
        }
        out += to_string(dc);
    }
    return out;
}

std::string render_policy(const ClassPolicy& policy) {
    std::string out = "{";
    for (const SurfaceClass cls : policy) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += to_string(cls);
    }
    return out + "}";
}

} // namespace

Partition cross_partition(int k) {
    const SkeletonSpec spec = SkeletonSpec::cross_polytope(k);
    const Modulus n = spec.modulus();

    std::vector<PartitionBlock> blocks;
    for (const DifferenceCycle& dc : cross_cycles(k)) {
        if (!dc.achiral() && dc < mirror(dc)) {
            blocks.push_back(make_block(n, {dc, mirror(dc)}));
        }
    }
    // Boundary-matched achiral pairs: the degree-1 edges of (a:a:2k-2a) and
    // (k-a:k-a:2a) both have difference class 2a, so the union is closed.
    // At a = k/3 the partner degenerates to the short-orbit cycle
    // (2k/3 : 2k/3 : 2k/3).
    for (int a = 1; 2 * a < k; ++a) {
        blocks.push_back(make_block(
            n, {normalize(a, a, 2 * k - 2 * a, n), normalize(k - a, k - a, 2 * a, n)}));
    }
    sort_blocks(blocks);
    certify_blocks(blocks);

    const bool accepted =
        std::all_of(blocks.begin(), blocks.end(), [](const PartitionBlock& b) {
            return b.certificate.all_components_in(cross_policy());
        });
    if (accepted) {
        Partition partition{spec, std::move(blocks), {}};
        partition.coverage = prove_coverage(spec, partition.blocks);
        if (partition.coverage.complete()) {
            return partition;
        }
    }
    try {
        return search_partition(spec, cross_policy());
    } catch (const Error& e) {
        throw ConstructionError("construction failure for cross polytope k=" +
                                std::to_string(k) +
                                ": closed form rejected and search failed: " + e.what());
    }
}

Partition simplex_partition(int k) {
    if (k < 5 || (k % 6 != 1 && k % 6 != 5)) {
        throw InputError("ineligible k: the simplex decomposition requires k = 1 or 5 "
                         "(mod 6) and k >= 5, got " +
                         std::to_string(k));
    }
    const SkeletonSpec spec = SkeletonSpec::simplex(k);
    const Modulus n = spec.modulus();

    std::vector<PartitionBlock> blocks;
    for (const DifferenceCycle& dc : simplex_cycles(k)) {
        if (dc.achiral()) {
            blocks.push_back(make_block(n, {dc}));
        } else if (dc < mirror(dc)) {
            blocks.push_back(make_block(n, {dc, mirror(dc)}));
        }
    }
    sort_blocks(blocks);
    certify_blocks(blocks);

    for (const PartitionBlock& b : blocks) {
        const SurfaceClass wanted =
            b.cycles.size() == 2 ? SurfaceClass::Torus : SurfaceClass::MoebiusStrip;
        for (const ComponentCertificate& comp : b.certificate.components) {
            if (!comp.is_surface() || comp.classification != wanted) {
                throw ConstructionError(
                    "construction failure for simplex k=" + std::to_string(k) + ": block " +
                    render_cycles(b.cycles) + " has a component certified " +
                    to_string(comp.classification) + ", expected " + to_string(wanted));
            }
        }
    }

    Partition partition{spec, std::move(blocks), {}};
    partition.coverage = prove_coverage(spec, partition.blocks);
    if (!partition.coverage.complete()) {
        throw ConstructionError("construction failure for simplex k=" + std::to_string(k) +
                                ": coverage incomplete");
    }
    return partition;
}

namespace {

// Uniform edge-class degree bookkeeping.  In any union of difference-cycle
// orbits, all edges of one difference class share the same degree, so a block
// candidate can be pruned on a small class -> degree table.  A full orbit
// covers each edge of class d(x) once per gap slot x in {a, b, a+b}, twice
// when x = n/2; the short orbit (m:m:m) covers each class-m edge once.
std::map<int, int> class_contribution(const DifferenceCycle& dc) {
    const int n = dc.modulus().value();
    std::map<int, int> contrib;
    if (dc.orbit_size() < n) {
        contrib[std::min(dc.a(), n - dc.a())] += 1;
        return contrib;
    }
    for (const int x : {dc.a(), dc.b(), (dc.a() + dc.b()) % n}) {
        contrib[std::min(x, n - x)] += (2 * x == n) ? 2 : 1;
    }
    return contrib;
}

struct OptionGenerator {
    Modulus n;
    const std::vector<DifferenceCycle>& cycles;
    const ClassPolicy& policy;
    std::vector<std::map<int, int>> contribs;
    bool boundary_allowed = false;
    std::vector<std::vector<int>> options;

    OptionGenerator(Modulus n_, const std::vector<DifferenceCycle>& cycles_,
                    const ClassPolicy& policy_)
        : n(n_), cycles(cycles_), policy(policy_) {
        contribs.reserve(cycles.size());
        for (const DifferenceCycle& dc : cycles) {
            contribs.push_back(class_contribution(dc));
        }
        boundary_allowed = policy.count(SurfaceClass::MoebiusStrip) > 0 ||
                           policy.count(SurfaceClass::Annulus) > 0 ||
                           policy.count(SurfaceClass::Disk) > 0;
    }

    bool acceptable(const std::vector<int>& indices) const {
        std::vector<DifferenceCycle> cs;
        cs.reserve(indices.size());
        for (const int i : indices) {
            cs.push_back(cycles[static_cast<std::size_t>(i)]);
        }
        const TwoComplex complex = TwoComplex::from_cycles(n, std::move(cs));
        return certify(complex).all_components_in(policy);
    }

    void run() {
        std::vector<int> indices;
        std::map<int, int> degrees;
        for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
            extend(i, indices, degrees);
        }
    }

private:
    static bool fits(const std::map<int, int>& degrees, const std::map<int, int>& add) {
        for (const auto& [cls, amount] : add) {
            const auto it = degrees.find(cls);
            if ((it == degrees.end() ? 0 : it->second) + amount > 2) {
                return false;
            }
        }
        return true;
    }

    void extend(int next, std::vector<int>& indices, std::map<int, int>& degrees) {
        const auto& add = contribs[static_cast<std::size_t>(next)];
        if (!fits(degrees, add)) {
            return;
        }
        indices.push_back(next);
        for (const auto& [cls, amount] : add) {
            degrees[cls] += amount;
        }

        const bool deficient = std::any_of(degrees.begin(), degrees.end(),
                                           [](const auto& kv) { return kv.second == 1; });
        if (!deficient) {
            // Closed candidate: a policy check settles it, and extending a
            // closed block either overfills one of its classes or only adds
            // detached blocks that can stand alone.
            if (acceptable(indices)) {
                options.push_back(indices);
            }
        } else {
            if (boundary_allowed && acceptable(indices)) {
                options.push_back(indices);
            }
            for (int j = next + 1; j < static_cast<int>(cycles.size()); ++j) {
                extend(j, indices, degrees);
            }
        }

        for (const auto& [cls, amount] : add) {
            if ((degrees[cls] -= amount) == 0) {
                degrees.erase(cls);
            }
        }
        indices.pop_back();
    }
};

bool cover_search(std::uint64_t covered, std::uint64_t full,
                  const std::vector<std::uint64_t>& masks,
                  const std::vector<std::vector<int>>& containing,
                  std::vector<int>& chosen) {
    if (covered == full) {
        return true;
    }
    int lowest = 0;
    while ((covered >> lowest) & 1u) {
        ++lowest;
    }
    for (const int id : containing[static_cast<std::size_t>(lowest)]) {
        const std::uint64_t mask = masks[static_cast<std::size_t>(id)];
        if ((mask & covered) != 0) {
            continue;
        }
        chosen.push_back(id);
        if (cover_search(covered | mask, full, masks, containing, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

} // namespace

Partition search_partition(const SkeletonSpec& spec, const ClassPolicy& policy) {
    const std::vector<DifferenceCycle> cycles = spec.cycles();
    if (cycles.size() > 64) {
        throw InputError("search guard: " + std::to_string(cycles.size()) +
                         " difference cycles exceed the 64-cycle search limit");
    }
    const Modulus n = spec.modulus();

    OptionGenerator gen(n, cycles, policy);
    gen.run();

    // Smaller blocks first, lexicographic within one size.
    std::sort(gen.options.begin(), gen.options.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  if (x.size() != y.size()) {
                      return x.size() < y.size();
                  }
                  return x < y;
              });

    std::vector<std::uint64_t> masks;
    masks.reserve(gen.options.size());
    for (const std::vector<int>& opt : gen.options) {
        std::uint64_t mask = 0;
        for (const int i : opt) {
            mask |= std::uint64_t{1} << i;
        }
        masks.push_back(mask);
    }
    std::vector<std::vector<int>> containing(cycles.size());
    for (int id = 0; id < static_cast<int>(gen.options.size()); ++id) {
        for (const int i : gen.options[static_cast<std::size_t>(id)]) {
            containing[static_cast<std::size_t>(i)].push_back(id);
        }
    }

    const std::uint64_t full = cycles.size() == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << cycles.size()) - 1;
    std::vector<int> chosen;
    if (!cover_search(0, full, masks, containing, chosen)) {
        throw ConstructionError("no partition found: exact cover over " +
                                std::to_string(cycles.size()) + " cycles and " +
                                std::to_string(gen.options.size()) +
                                " candidate blocks is infeasible for policy " +
                                render_policy(policy));
    }

    std::vector<PartitionBlock> blocks;
    blocks.reserve(chosen.size());
    for (const int id : chosen) {
        std::vector<DifferenceCycle> cs;
        for (const int i : gen.options[static_cast<std::size_t>(id)]) {
            cs.push_back(cycles[static_cast<std::size_t>(i)]);
        }
        blocks.push_back(make_block(n, std::move(cs)));
    }
    sort_blocks(blocks);
    certify_blocks(blocks);

    Partition partition{spec, std::move(blocks), {}};
    partition.coverage = prove_coverage(spec, partition.blocks);
    if (!partition.coverage.complete()) {
        throw ConstructionError("no partition found: search result failed coverage");
    }
    return partition;
}

Partition verify_partition(const SkeletonSpec& spec,
                           const std::vector<std::vector<DifferenceCycle>>& cycle_blocks) {
    const Modulus n = spec.modulus();

    for (std::size_t i = 0; i < cycle_blocks.size(); ++i) {
        const std::string label = "block " + std::to_string(i + 1);
        if (cycle_blocks[i].empty()) {
            throw InputError(label + " is empty");
        }
        for (const DifferenceCycle& dc : cycle_blocks[i]) {
            if (dc.modulus() != n) {
                throw InputError(label + ": cycle " + to_string(dc) + " is mod " +
                                 std::to_string(dc.modulus().value()) + ", expected mod " +
                                 std::to_string(n.value()));
            }
            if (spec.kind() == SkeletonKind::CrossPolytope) {
                for (const int g : dc.gaps()) {
                    if (g == spec.k()) {
                        throw VerifyError("skeleton violation: " + label + " cycle " +
                                          to_string(dc) + " has gap " +
                                          std::to_string(spec.k()) +
                                          "; its triangles contain antipodal pairs");
                    }
                }
            }
        }
    }

    // Orbits of distinct canonical cycles are disjoint, so a repeated cycle is
    // the only way two blocks can share triangles.
    std::map<DifferenceCycle, std::size_t> first_use;
    for (std::size_t i = 0; i < cycle_blocks.size(); ++i) {
        for (const DifferenceCycle& dc : cycle_blocks[i]) {
            const auto [it, inserted] = first_use.emplace(dc, i + 1);
            if (!inserted) {
                throw VerifyError("coverage overlap: cycle " + to_string(dc) +
                                  " appears in block " + std::to_string(it->second) +
                                  " and block " + std::to_string(i + 1));
            }
        }
    }

    std::vector<PartitionBlock> blocks;
    blocks.reserve(cycle_blocks.size());
    for (const std::vector<DifferenceCycle>& cs : cycle_blocks) {
        blocks.push_back(make_block(n, cs));
    }
    certify_blocks(blocks);

    const ClassPolicy& policy = policy_for(spec);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const PartitionBlock& b = blocks[i];
        if (b.certificate.all_components_in(policy)) {
            continue;
        }
        const std::string label = "block " + std::to_string(i + 1);
        if (spec.kind() == SkeletonKind::CrossPolytope && !b.certificate.all_closed()) {
            std::set<int> open_classes;
            for (const auto& [edge, incident] : b.complex.edges()) {
                if (incident.size() == 1) {
                    open_classes.insert(difference_class(edge, n));
                }
            }
            std::ostringstream msg;
            msg << "certification failure: " << label << " not closed (degree-1 edges of gap "
                << (open_classes.size() == 1 ? "class" : "classes");
            bool first = true;
            for (const int cls : open_classes) {
                msg << (first ? " " : ", ") << cls;
                first = false;
            }
            msg << ")";
            throw VerifyError(msg.str());
        }
        for (std::size_t j = 0; j < b.certificate.components.size(); ++j) {
            const ComponentCertificate& comp = b.certificate.components[j];
            if (!comp.is_surface() || policy.count(comp.classification) == 0) {
                throw VerifyError("certification failure: " + label + " component " +
                                  std::to_string(j + 1) + " certified " +
                                  to_string(comp.classification) + ", expected one of " +
                                  render_policy(policy));
            }
        }
        throw VerifyError("certification failure: " + label);
    }

    const CoverageProof proof = prove_coverage(spec, blocks);
    if (!proof.disjoint) {
        throw VerifyError("coverage overlap: blocks share triangles");
    }
    if (proof.block_triangles != proof.skeleton_triangles) {
        std::set<DifferenceCycle> used;
        for (const std::vector<DifferenceCycle>& cs : cycle_blocks) {
            used.insert(cs.begin(), cs.end());
        }
        std::ostringstream msg;
        msg << "coverage gap: blocks cover " << proof.block_triangles << " of "
            << proof.skeleton_triangles << " skeleton triangles; missing cycles:";
        for (const DifferenceCycle& dc : spec.cycles()) {
            if (!used.count(dc)) {
                msg << " " << to_string(dc);
            }
        }
        throw VerifyError(msg.str());
    }

    return Partition{spec, std::move(blocks), proof};
}

} // namespace xpoly
