#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "xpoly/surface.hpp"

using namespace xpoly;

namespace {

TwoComplex from(std::initializer_list<DifferenceCycle> cycles, int n) {
    return TwoComplex::from_cycles(Modulus(n), cycles);
}

// The hemi-icosahedron: minimal 6-vertex triangulation of the projective
// plane (V=6, E=15, F=10), used as a known nonorientable closed model.
TwoComplex hemi_icosahedron() {
    const Modulus n(6);
    std::vector<Triangle> tris;
    for (const auto& t : {std::array<int, 3>{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 0},
                          {1, 5, 0}, {2, 3, 0}, {2, 4, 5}, {2, 5, 0}, {3, 4, 5}, {3, 4, 0}}) {
        tris.emplace_back(t[0], t[1], t[2], n);
    }
    return TwoComplex::from_triangles(n, std::move(tris));
}

} // namespace

TEST_CASE("octahedron certifies as a sphere") {
    const Modulus n(6);
    const SurfaceCertificate cert =
        certify(from({normalize(1, 1, 4, n), normalize(2, 2, 2, n)}, 6));
    REQUIRE(cert.components.size() == 1);
    const ComponentCertificate& c = cert.components[0];
    CHECK(c.is_pseudomanifold);
    CHECK(c.is_closed);
    CHECK(c.links_ok);
    CHECK(c.vertex_count == 6);
    CHECK(c.edge_count == 12);
    CHECK(c.triangle_count == 8);
    CHECK(c.euler_characteristic == 2);
    REQUIRE(c.orientable.has_value());
    CHECK(*c.orientable);
    CHECK(c.boundary_components == 0);
    CHECK(c.genus == 0);
    CHECK(c.classification == SurfaceClass::Sphere);
}

TEST_CASE("the mirror pair (1:2:4),(1:4:2) mod 7 is the 7-vertex torus") {
    const Modulus n(7);
    const SurfaceCertificate cert =
        certify(from({normalize(1, 2, 4, n), normalize(1, 4, 2, n)}, 7));
    REQUIRE(cert.components.size() == 1);
    const ComponentCertificate& c = cert.components[0];
    CHECK(c.vertex_count == 7);
    CHECK(c.edge_count == 21);
    CHECK(c.triangle_count == 14);
    CHECK(c.euler_characteristic == 0);
    CHECK(c.is_closed);
    CHECK(c.links_ok);
    REQUIRE(c.orientable.has_value());
    CHECK(*c.orientable);
    CHECK(c.genus == 1);
    CHECK(c.classification == SurfaceClass::Torus);
}

TEST_CASE("(1:1:5) mod 7 is a Moebius strip") {
    const Modulus n(7);
    const TwoComplex strip = from({normalize(1, 1, 5, n)}, 7);
    const SurfaceCertificate cert = certify(strip);
    REQUIRE(cert.components.size() == 1);
    const ComponentCertificate& c = cert.components[0];
    CHECK(c.vertex_count == 7);
    CHECK(c.edge_count == 14);
    CHECK(c.triangle_count == 7);
    CHECK(c.euler_characteristic == 0);
    CHECK(c.is_pseudomanifold);
    CHECK_FALSE(c.is_closed);
    CHECK(c.links_ok);
    CHECK(c.boundary_components == 1);
    CHECK(c.boundary_cycle_lengths == std::vector<int>{7});
    REQUIRE(c.orientable.has_value());
    CHECK_FALSE(*c.orientable);
    CHECK(c.genus == 1);
    CHECK(c.classification == SurfaceClass::MoebiusStrip);

    SUBCASE("nonorientability agrees with the exhaustive assignment search") {
        CHECK_FALSE(oracle::exhaustively_orientable(strip));
        const auto prop = orientable_by_propagation(strip);
        REQUIRE(prop.has_value());
        CHECK_FALSE(*prop);
    }
}

TEST_CASE("(1:1:4) mod 6 is an annulus") {
    const Modulus n(6);
    const SurfaceCertificate cert = certify(from({normalize(1, 1, 4, n)}, 6));
    REQUIRE(cert.components.size() == 1);
    const ComponentCertificate& c = cert.components[0];
    CHECK(c.euler_characteristic == 0);
    CHECK(c.boundary_components == 2);
    CHECK(c.boundary_cycle_lengths == std::vector<int>{3, 3});
    REQUIRE(c.orientable.has_value());
    CHECK(*c.orientable);
    CHECK(c.genus == 0);
    CHECK(c.classification == SurfaceClass::Annulus);
}

TEST_CASE("a single triangle is a disk") {
    const Modulus n(6);
    const SurfaceCertificate cert =
        certify(TwoComplex::from_triangles(n, {Triangle(0, 2, 4, n)}));
    REQUIRE(cert.components.size() == 1);
    CHECK(cert.components[0].classification == SurfaceClass::Disk);
    CHECK(cert.components[0].euler_characteristic == 1);
    CHECK(cert.components[0].genus == 0);
    CHECK(cert.components[0].boundary_components == 1);
}

TEST_CASE("hemi-icosahedron certifies as the projective plane") {
    const TwoComplex rp2 = hemi_icosahedron();
    const SurfaceCertificate cert = certify(rp2);
    REQUIRE(cert.components.size() == 1);
    const ComponentCertificate& c = cert.components[0];
    CHECK(c.vertex_count == 6);
    CHECK(c.edge_count == 15);
    CHECK(c.triangle_count == 10);
    CHECK(c.euler_characteristic == 1);
    CHECK(c.is_closed);
    CHECK(c.links_ok);
    REQUIRE(c.orientable.has_value());
    CHECK_FALSE(*c.orientable);
    CHECK(c.genus == 1);
    CHECK(c.classification == SurfaceClass::ProjectivePlane);
    CHECK_FALSE(oracle::exhaustively_orientable(rp2));
}

TEST_CASE("grid models: torus and Klein bottle from a fundamental square") {
    const SurfaceCertificate torus = certify(oracle::grid_torus());
    REQUIRE(torus.components.size() == 1);
    CHECK(torus.components[0].is_closed);
    CHECK(torus.components[0].euler_characteristic == 0);
    REQUIRE(torus.components[0].orientable.has_value());
    CHECK(*torus.components[0].orientable);
    CHECK(torus.components[0].classification == SurfaceClass::Torus);
    CHECK(oracle::exhaustively_orientable(oracle::grid_torus()));

    const SurfaceCertificate klein = certify(oracle::grid_klein_bottle());
    REQUIRE(klein.components.size() == 1);
    CHECK(klein.components[0].is_closed);
    CHECK(klein.components[0].euler_characteristic == 0);
    REQUIRE(klein.components[0].orientable.has_value());
    CHECK_FALSE(*klein.components[0].orientable);
    CHECK(klein.components[0].genus == 2);
    CHECK(klein.components[0].classification == SurfaceClass::KleinBottle);
    CHECK_FALSE(oracle::exhaustively_orientable(oracle::grid_klein_bottle()));
}

TEST_CASE("the closed union {(1:1:8),(2:4:4)} mod 10 is a forced Klein bottle") {
    // (2:4:4) is the strip (4:4:2): gcd(4,10) = 2 components, each the
    // 5-triangle Moebius strip, so any closed complex containing it is
    // nonorientable.  (1:1:8) closes its boundary with chi = 0.
    const Modulus n(10);
    const TwoComplex c = from({normalize(1, 1, 8, n), normalize(2, 4, 4, n)}, 10);
    const SurfaceCertificate cert = certify(c);
    REQUIRE(cert.components.size() == 1);
    CHECK(cert.components[0].is_closed);
    CHECK(cert.components[0].links_ok);
    CHECK(cert.components[0].euler_characteristic == 0);
    REQUIRE(cert.components[0].orientable.has_value());
    CHECK_FALSE(*cert.components[0].orientable);
    CHECK(cert.components[0].classification == SurfaceClass::KleinBottle);
    CHECK_FALSE(oracle::exhaustively_orientable(c));

    // the Moebius subcomplex witness
    const SurfaceCertificate strip = certify(from({normalize(2, 4, 4, n)}, 10));
    REQUIRE(strip.components.size() == 2);
    for (const auto& comp : strip.components) {
        CHECK(comp.classification == SurfaceClass::MoebiusStrip);
    }
}

TEST_CASE("classification table is exhaustive over the certificate data") {
    CHECK(classify_surface(2, true, 0) == SurfaceClass::Sphere);
    CHECK(classify_surface(0, true, 0) == SurfaceClass::Torus);
    CHECK(classify_surface(-2, true, 0) == SurfaceClass::Other);  // genus 2
    CHECK(classify_surface(1, false, 0) == SurfaceClass::ProjectivePlane);
    CHECK(classify_surface(0, false, 0) == SurfaceClass::KleinBottle);
    CHECK(classify_surface(-1, false, 0) == SurfaceClass::Other); // genus 3
    CHECK(classify_surface(1, true, 1) == SurfaceClass::Disk);
    CHECK(classify_surface(0, true, 2) == SurfaceClass::Annulus);
    CHECK(classify_surface(0, false, 1) == SurfaceClass::MoebiusStrip);
    CHECK(classify_surface(-1, true, 1) == SurfaceClass::Other);  // once-holed torus
    CHECK(classify_surface(-1, false, 2) == SurfaceClass::Other);
}

TEST_CASE("boundary cycles") {
    SUBCASE("(1:1:5) mod 7 has one boundary 7-cycle") {
        const Modulus n(7);
        const auto cycles = boundary_cycles(from({normalize(1, 1, 5, n)}, 7));
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].size() == 7);
    }

    SUBCASE("the octahedron is closed") {
        const Modulus n(6);
        CHECK(boundary_cycles(from({normalize(1, 1, 4, n), normalize(2, 2, 2, n)}, 6)).empty());
    }

    SUBCASE("(2:2:4) mod 8 is closed: two tetrahedron boundaries") {
        // Brute-force edge recount: the gap-4 edge {i, i+4} lies in the two
        // triangles {i, i+2, i+4} and {i+4, i+6, i}, so no degree-1 edges
        // exist and the complex is a disjoint pair of spheres.
        const Modulus n(8);
        const TwoComplex c = from({normalize(2, 2, 4, n)}, 8);
        CHECK(oracle::boundary_edges_by_recount(c).empty());
        CHECK(boundary_cycles(c).empty());
        const SurfaceCertificate cert = certify(c);
        REQUIRE(cert.components.size() == 2);
        for (const auto& comp : cert.components) {
            CHECK(comp.classification == SurfaceClass::Sphere);
            CHECK(comp.vertex_count == 4);
            CHECK(comp.triangle_count == 4);
        }
    }

    SUBCASE("(1:1:4) mod 6 has two boundary 3-cycles") {
        const Modulus n(6);
        const auto cycles = boundary_cycles(from({normalize(1, 1, 4, n)}, 6));
        REQUIRE(cycles.size() == 2);
        CHECK(cycles[0].size() == 3);
        CHECK(cycles[1].size() == 3);
    }

    SUBCASE("boundary edges match the brute-force recount across small unions") {
        for (int n = 4; n <= 10; ++n) {
            const Modulus m(n);
            const auto all = enumerate_all(m);
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (std::size_t j = i; j < all.size(); ++j) {
                    const auto cycles = i == j
                                            ? std::vector<DifferenceCycle>{all[i]}
                                            : std::vector<DifferenceCycle>{all[i], all[j]};
                    const TwoComplex c = TwoComplex::from_cycles(m, cycles);
                    bool pseudo = true;
                    for (const auto& [e, incident] : c.edges()) {
                        if (incident.size() > 2) pseudo = false;
                    }
                    if (!pseudo) {
                        CHECK_THROWS_AS(boundary_cycles(c), VerifyError);
                        continue;
                    }
                    const auto walked = boundary_cycles(c);
                    std::size_t walked_edges = 0;
                    for (const auto& cycle : walked) {
                        walked_edges += cycle.size();
                    }
                    CHECK(walked_edges == oracle::boundary_edges_by_recount(c).size());
                }
            }
        }
    }
}

TEST_CASE("propagation matches exhaustive orientation search on cycle unions") {
    for (int n = 3; n <= 10; ++n) {
        const Modulus m(n);
        const auto all = enumerate_all(m);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i; j < all.size(); ++j) {
                const auto cycles = i == j ? std::vector<DifferenceCycle>{all[i]}
                                           : std::vector<DifferenceCycle>{all[i], all[j]};
                const TwoComplex c = TwoComplex::from_cycles(m, cycles);
                const auto prop = orientable_by_propagation(c);
                if (!prop.has_value()) {
                    continue; // not a pseudomanifold
                }
                CHECK(*prop == oracle::exhaustively_orientable(c));
            }
        }
    }
}

TEST_CASE("certification is invariant under the shift relabeling") {
    const Modulus n(7);
    const TwoComplex strip = from({normalize(1, 1, 5, n)}, 7);
    for (int s = 0; s < 7; ++s) {
        const SurfaceCertificate cert = certify(strip.shifted(s));
        REQUIRE(cert.components.size() == 1);
        CHECK(cert.components[0].classification == SurfaceClass::MoebiusStrip);
        CHECK(cert.components[0].euler_characteristic == 0);
    }

    // a relabeled octahedron (not a cycle union as listed) still certifies
    const Modulus six(6);
    const TwoComplex oct = from({normalize(1, 1, 4, six), normalize(2, 2, 2, six)}, 6);
    std::vector<Triangle> relabeled;
    for (const Triangle& t : oct.triangles()) {
        relabeled.push_back(t.shifted(5, six));
    }
    const SurfaceCertificate cert =
        certify(TwoComplex::from_triangles(six, std::move(relabeled)));
    CHECK(cert.components[0].classification == SurfaceClass::Sphere);
}

TEST_CASE("non-surface inputs are reported, not misclassified") {
    SUBCASE("edge of degree 3 fails the pseudomanifold check") {
        const Modulus n(6);
        const TwoComplex c = TwoComplex::from_triangles(
            n, {Triangle(0, 1, 2, n), Triangle(0, 1, 3, n), Triangle(0, 1, 4, n)});
        const SurfaceCertificate cert = certify(c);
        REQUIRE(cert.components.size() == 1);
        CHECK_FALSE(cert.components[0].is_pseudomanifold);
        CHECK_FALSE(cert.components[0].is_surface());
        CHECK_FALSE(cert.components[0].orientable.has_value());
        CHECK_FALSE(cert.components[0].genus.has_value());
        CHECK(cert.components[0].classification == SurfaceClass::Other);
        CHECK_FALSE(orientable_by_propagation(c).has_value());
    }

    SUBCASE("two disks pinched at a vertex fail the link check") {
        const Modulus n(9);
        const TwoComplex c = TwoComplex::from_triangles(
            n, {Triangle(0, 1, 2, n), Triangle(0, 3, 4, n)});
        const SurfaceCertificate cert = certify(c);
        REQUIRE(cert.components.size() == 1); // connected through vertex 0
        CHECK(cert.components[0].is_pseudomanifold);
        CHECK_FALSE(cert.components[0].links_ok);
        CHECK(cert.components[0].classification == SurfaceClass::Other);
    }

    SUBCASE("empty complex is rejected") {
        CHECK_THROWS_AS(certify(TwoComplex::from_cycles(Modulus(7), {})), InputError);
    }
}

TEST_CASE("is_subcomplex_of_skeleton") {
    const Modulus six(6);
    const TwoComplex oct = from({normalize(1, 1, 4, six), normalize(2, 2, 2, six)}, 6);
    CHECK(is_subcomplex_of_skeleton(oct, SkeletonSpec::cross_polytope(3)));

    const TwoComplex bad = from({normalize(1, 2, 3, six)}, 6);
    CHECK_FALSE(is_subcomplex_of_skeleton(bad, SkeletonSpec::cross_polytope(3)));

    CHECK(is_subcomplex_of_skeleton(bad, SkeletonSpec::simplex(6)));
    CHECK_THROWS_AS(is_subcomplex_of_skeleton(oct, SkeletonSpec::cross_polytope(4)),
                    InputError);
}

TEST_CASE("chi from counts equals chi from the classification") {
    // over every certified surface among two-cycle unions, n <= 10
    for (int n = 4; n <= 10; ++n) {
        const Modulus m(n);
        const auto all = enumerate_all(m);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                const SurfaceCertificate cert =
                    certify(TwoComplex::from_cycles(m, {all[i], all[j]}));
                for (const auto& comp : cert.components) {
                    if (!comp.is_surface()) {
                        continue;
                    }
                    REQUIRE(comp.genus.has_value());
                    const int chi_back = *comp.orientable
                                             ? 2 - 2 * *comp.genus - comp.boundary_components
                                             : 2 - *comp.genus - comp.boundary_components;
                    CHECK(chi_back == comp.euler_characteristic);
                }
            }
        }
    }
}
