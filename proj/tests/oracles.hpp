#pragma once

// Test-only reference computations. Nothing here goes through the library's
// tables, echelon forms or locate(); the only shared convention is the
// element encoding c0 + c1*p + c2*p^2 of GF(p^3).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

/// GF(p^3) for prime p by schoolbook polynomial arithmetic modulo a monic cubic.
struct PrimeCubic {
    unsigned p;
    std::array<unsigned, 4> mod;  // low degree first, mod[3] == 1

    using E = std::array<unsigned, 3>;

    unsigned order() const { return p * p * p; }
    E from_index(unsigned i) const { return {i % p, (i / p) % p, i / (p * p)}; }
    unsigned index(const E& e) const { return e[0] + p * (e[1] + p * e[2]); }

    E add(const E& a, const E& b) const { return {(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p}; }
    E sub(const E& a, const E& b) const
    {
        return {(a[0] + p - b[0]) % p, (a[1] + p - b[1]) % p, (a[2] + p - b[2]) % p};
    }

    E mul(const E& a, const E& b) const
    {
        std::array<unsigned, 5> d{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                d[i + j] = (d[i + j] + a[i] * b[j]) % p;
            }
        }
        for (int k = 4; k >= 3; --k) {
            const unsigned c = d[k];
            d[k] = 0;
            for (int i = 0; i < 3; ++i) {
                d[k - 3 + i] = (d[k - 3 + i] + p * p - (c * mod[i]) % p) % p;
            }
        }
        return {d[0], d[1], d[2]};
    }

    E pow(E a, std::uint64_t n) const
    {
        E r{1, 0, 0};
        for (std::uint64_t i = 0; i < n; ++i) {
            r = mul(r, a);
        }
        return r;
    }

    unsigned norm_index(unsigned x) const { return index(pow(from_index(x), p * p + p + 1)); }

    bool cubic_has_root() const
    {
        for (unsigned x = 0; x < p; ++x) {
            if ((mod[0] + mod[1] * x + mod[2] * x * x + x * x * x) % p == 0) {
                return true;
            }
        }
        return false;
    }
};

using V6 = std::array<unsigned, 6>;

inline unsigned inv_mod(unsigned a, unsigned p)
{
    for (unsigned x = 1; x < p; ++x) {
        if (a * x % p == 1) {
            return x;
        }
    }
    return 0;
}

inline V6 normalize(V6 v, unsigned p)
{
    for (unsigned x : v) {
        if (x != 0) {
            const unsigned s = inv_mod(x, p);
            for (auto& y : v) {
                y = y * s % p;
            }
            return v;
        }
    }
    return v;
}

inline std::uint32_t code(const V6& v, unsigned p)
{
    std::uint32_t c = 0;
    for (unsigned x : v) {
        c = c * p + x;
    }
    return c;
}

/// Sorted point codes of the projective subspace spanned by the given
/// vectors (closure under all GF(p) combinations).
inline std::vector<std::uint32_t> span_points(const std::vector<V6>& gens, unsigned p)
{
    std::set<std::uint32_t> pts;
    const std::size_t k = gens.size();
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < k; ++i) {
        combos *= p;
    }
    for (std::uint64_t n = 1; n < combos; ++n) {
        V6 v{};
        std::uint64_t x = n;
        for (std::size_t i = 0; i < k; ++i) {
            const unsigned c = unsigned(x % p);
            x /= p;
            for (int j = 0; j < 6; ++j) {
                v[j] = (v[j] + c * gens[i][j]) % p;
            }
        }
        bool zero = std::all_of(v.begin(), v.end(), [](unsigned y) { return y == 0; });
        if (!zero) {
            pts.insert(code(normalize(v, p), p));
        }
    }
    return {pts.begin(), pts.end()};
}

/// All normalized points of PG(5,p) as vectors.
inline std::vector<V6> all_points(unsigned p)
{
    std::set<std::uint32_t> seen;
    std::vector<V6> out;
    std::uint32_t total = 1;
    for (int i = 0; i < 6; ++i) {
        total *= p;
    }
    for (std::uint32_t n = 1; n < total; ++n) {
        V6 v{};
        std::uint32_t x = n;
        for (int j = 5; j >= 0; --j) {
            v[j] = x % p;
            x /= p;
        }
        v = normalize(v, p);
        if (seen.insert(code(v, p)).second) {
            out.push_back(v);
        }
    }
    return out;
}

/// Every plane of PG(5,p) as a sorted set of point codes, found by spanning
/// all point triples. Only practical for p = 2.
inline std::set<std::vector<std::uint32_t>> planes_as_point_sets(unsigned p)
{
    const auto pts = all_points(p);
    std::set<std::vector<std::uint32_t>> planes;
    const std::size_t plane_size = p * p + p + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                auto s = span_points({pts[i], pts[j], pts[k]}, p);
                if (s.size() == plane_size) {
                    planes.insert(std::move(s));
                }
            }
        }
    }
    return planes;
}

/// Point codes of the spread element J(m) = {(x, m x)} (m < p^3) or J(inf)
/// (m == p^3), computed with PrimeCubic arithmetic.
inline std::vector<std::uint32_t> spread_element_points(const PrimeCubic& f, unsigned m)
{
    std::set<std::uint32_t> pts;
    for (unsigned i = 1; i < f.order(); ++i) {
        const auto x = f.from_index(i);
        V6 v{};
        if (m == f.order()) {
            v = {0, 0, 0, x[0], x[1], x[2]};
        } else {
            const auto y = f.mul(f.from_index(m), x);
            v = {x[0], x[1], x[2], y[0], y[1], y[2]};
        }
        pts.insert(code(normalize(v, f.p), f.p));
    }
    return {pts.begin(), pts.end()};
}

struct Census {
    std::uint64_t a = 0, b = 0, c = 0;
};

/// Classifies every plane by the sizes of its intersections with the spread
/// elements, all as explicit point sets.
inline Census census_by_point_sets(const PrimeCubic& f)
{
    const unsigned p = f.p;
    std::vector<std::vector<std::uint32_t>> spread;
    for (unsigned m = 0; m <= f.order(); ++m) {
        spread.push_back(spread_element_points(f, m));
    }
    Census out;
    for (const auto& plane : planes_as_point_sets(p)) {
        std::map<std::size_t, int> sizes;
        for (const auto& s : spread) {
            std::vector<std::uint32_t> meet;
            std::set_intersection(plane.begin(), plane.end(), s.begin(), s.end(), std::back_inserter(meet));
            ++sizes[meet.size()];
        }
        if (sizes[p * p + p + 1] == 1) {
            ++out.a;
        } else if (sizes[p + 1] == 1) {
            ++out.c;
        } else if (sizes[1] == int(p * p + p + 1)) {
            ++out.b;
        }
    }
    return out;
}

}  // namespace oracle
