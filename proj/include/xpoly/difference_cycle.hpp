#pragma once

// Difference-cycle arithmetic over Z_n: canonical gap triples, orbit
// expansion, triangle classification, mirroring, enumeration.  A difference
// cycle (a : b : c) with a+b+c = n encodes the Z_n-orbit of the triangle
// {0, a, a+b} under the cyclic shift i -> i+1.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "xpoly/error.hpp"

namespace xpoly {

/// Order of the acting cyclic group (2k for the cross polytope, k for the
/// simplex).  Values below 3 are rejected at construction.
class Modulus {
public:
    explicit Modulus(int n);
    int value() const { return n_; }
    friend auto operator<=>(const Modulus&, const Modulus&) = default;

private:
    int n_;
};

/// A triangle on vertex set Z_n, stored as a sorted triple of distinct
/// residues.
struct Triangle {
    std::array<int, 3> v{};

    Triangle() = default;
    Triangle(int x, int y, int z, Modulus n);

    /// The triangle {v0+s, v1+s, v2+s} mod n.
    Triangle shifted(int s, Modulus n) const;

    auto operator<=>(const Triangle&) const = default;
};

/// A Z_n-orbit of triangles encoded by its cyclic gap triple (a : b : c),
/// a+b+c = n.  The stored triple is the lexicographically least of the three
/// cyclic rotations; rotation-equivalent inputs construct equal values.
class DifferenceCycle {
public:
    DifferenceCycle(int a, int b, int c, Modulus n);

    int a() const { return gaps_[0]; }
    int b() const { return gaps_[1]; }
    int c() const { return gaps_[2]; }
    const std::array<int, 3>& gaps() const { return gaps_; }
    Modulus modulus() const { return n_; }

    /// Number of triangles in the orbit: n/3 when a = b = c, n otherwise.
    int orbit_size() const;

    /// True when the cycle equals its mirror (a : c : b).
    bool achiral() const;

    auto operator<=>(const DifferenceCycle&) const = default;

private:
    Modulus n_;
    std::array<int, 3> gaps_;
};

/// Canonical difference cycle for the gap triple (a, b, c).  Throws
/// InputError unless a, b, c >= 1 and a+b+c = n.
DifferenceCycle normalize(int a, int b, int c, Modulus n);

/// The orbit { {i, i+a, i+a+b} mod n : i in Z_n } as a sorted set of
/// triangles.
std::vector<Triangle> expand(const DifferenceCycle& dc);

/// The unique difference cycle whose orbit contains t; inverse of expand.
DifferenceCycle classify(const Triangle& t, Modulus n);

/// The reflection partner (a : c : b), canonicalized.  An involution.
DifferenceCycle mirror(const DifferenceCycle& dc);

/// All canonical difference cycles mod n, sorted lexicographically.  Their
/// orbits partition the 3-subsets of Z_n.
std::vector<DifferenceCycle> enumerate_all(Modulus n);

/// Renders exactly "(a : b : c)".
std::string to_string(const DifferenceCycle& dc);
std::ostream& operator<<(std::ostream& os, const DifferenceCycle& dc);

/// Parses "(a : b : c)" with optional whitespace; the modulus is recovered
/// from a+b+c.  Throws ParseError on malformed text.
DifferenceCycle parse_difference_cycle(std::string_view text);

} // namespace xpoly
