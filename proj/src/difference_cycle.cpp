#include "xpoly/difference_cycle.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace xpoly {

Modulus::Modulus(int n) : n_(n) {
    if (n < 3) {
        throw InputError("modulus must be at least 3, got " + std::to_string(n));
    }
}

Triangle::Triangle(int x, int y, int z, Modulus n) : v{x, y, z} {
    std::sort(v.begin(), v.end());
    if (v[0] < 0 || v[2] >= n.value()) {
        throw InputError("triangle vertex out of range for modulus " +
                         std::to_string(n.value()));
    }
    if (v[0] == v[1] || v[1] == v[2]) {
        throw InputError("triangle vertices must be pairwise distinct");
    }
}

Triangle Triangle::shifted(int s, Modulus n) const {
    const int m = n.value();
    const int r = ((s % m) + m) % m;
    return Triangle((v[0] + r) % m, (v[1] + r) % m, (v[2] + r) % m, n);
}

namespace {

std::array<int, 3> least_rotation(std::array<int, 3> g) {
    const std::array<int, 3> r1{g[1], g[2], g[0]};
    const std::array<int, 3> r2{g[2], g[0], g[1]};
    return std::min({g, r1, r2});
}

} // namespace

DifferenceCycle::DifferenceCycle(int a, int b, int c, Modulus n) : n_(n), gaps_{a, b, c} {
    if (a < 1 || b < 1 || c < 1 || a + b + c != n.value()) {
        std::ostringstream msg;
        msg << "invalid gaps (" << a << ", " << b << ", " << c
            << "): need positive entries summing to " << n.value();
        throw InputError(msg.str());
    }
    gaps_ = least_rotation(gaps_);
}

int DifferenceCycle::orbit_size() const {
    return (gaps_[0] == gaps_[1] && gaps_[1] == gaps_[2]) ? n_.value() / 3 : n_.value();
}

bool DifferenceCycle::achiral() const {
    return mirror(*this) == *this;
}

DifferenceCycle normalize(int a, int b, int c, Modulus n) {
    return DifferenceCycle(a, b, c, n);
}

std::vector<Triangle> expand(const DifferenceCycle& dc) {
    const int n = dc.modulus().value();
    const int a = dc.a();
    const int ab = dc.a() + dc.b();
    std::vector<Triangle> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.emplace_back(i, (i + a) % n, (i + ab) % n, dc.modulus());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DifferenceCycle classify(const Triangle& t, Modulus n) {
    if (t.v[0] < 0 || t.v[2] >= n.value() || t.v[0] == t.v[1] || t.v[1] == t.v[2]) {
        throw InputError("triangle is not valid for modulus " + std::to_string(n.value()));
    }
    // Gap sequence around Z_n read off the sorted vertices, wrapping at n.
    const int g1 = t.v[1] - t.v[0];
    const int g2 = t.v[2] - t.v[1];
    const int g3 = n.value() - t.v[2] + t.v[0];
    return DifferenceCycle(g1, g2, g3, n);
}

DifferenceCycle mirror(const DifferenceCycle& dc) {
    return DifferenceCycle(dc.a(), dc.c(), dc.b(), dc.modulus());
}

std::vector<DifferenceCycle> enumerate_all(Modulus n) {
    std::vector<DifferenceCycle> out;
    const int m = n.value();
    for (int a = 1; a <= m - 2; ++a) {
        for (int b = 1; a + b <= m - 1; ++b) {
            const DifferenceCycle dc(a, b, m - a - b, n);
            // Keep only triples already in canonical position; rotations of
            // the same cycle are skipped rather than deduplicated afterwards.
            if (dc.gaps() == std::array<int, 3>{a, b, m - a - b}) {
                out.push_back(dc);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const DifferenceCycle& dc) {
    std::ostringstream os;
    os << "(" << dc.a() << " : " << dc.b() << " : " << dc.c() << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DifferenceCycle& dc) {
    return os << to_string(dc);
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
}

int parse_int(std::string_view text, std::size_t& pos) {
    skip_space(text, pos);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == start || pos - start > 9) {
        throw ParseError("expected a gap value at position " + std::to_string(start) +
                         " in difference cycle '" + std::string(text) + "'");
    }
    int value = 0;
    for (std::size_t i = start; i < pos; ++i) {
        value = value * 10 + (text[i] - '0');
    }
    return value;
}

void expect(std::string_view text, std::size_t& pos, char ch) {
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != ch) {
        throw ParseError(std::string("expected '") + ch + "' at position " +
                         std::to_string(pos) + " in difference cycle '" + std::string(text) +
                         "'");
    }
    ++pos;
}

} // namespace

DifferenceCycle parse_difference_cycle(std::string_view text) {
    std::size_t pos = 0;
    expect(text, pos, '(');
    const int a = parse_int(text, pos);
    expect(text, pos, ':');
    const int b = parse_int(text, pos);
    expect(text, pos, ':');
    const int c = parse_int(text, pos);
    expect(text, pos, ')');
    skip_space(text, pos);
    if (pos != text.size()) {
        throw ParseError("trailing characters after difference cycle '" + std::string(text) +
                         "'");
    }
    const int n = a + b + c;
    if (n < 3 || a < 1 || b < 1 || c < 1) {
        throw ParseError("gaps in '" + std::string(text) + "' do not form a difference cycle");
    }
    return DifferenceCycle(a, b, c, Modulus(n));
}

} // namespace xpoly
