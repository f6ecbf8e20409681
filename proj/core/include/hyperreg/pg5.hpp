#pragma once

// Points and planes of PG(5,q).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperreg/gf.hpp"

namespace hyperreg {

using Vec6 = std::array<Coord, 6>;

/// A point of PG(5,q): a nonzero vector scaled so its first nonzero entry is 1.
struct ProjPoint {
    Vec6 coords{};

    /// Normalizes v. Returns nullopt for the zero vector.
    static std::optional<ProjPoint> from_vector(const FieldCtx& ctx, const Vec6& v);

    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// 18 bytes: the RREF basis entries of a plane, row-major.
using PlaneKey = std::array<std::uint8_t, 18>;

struct PlaneKeyHash {
    std::size_t operator()(const PlaneKey& k) const noexcept;
};

/// Renders a key as 18 lowercase hex digits (every entry is < 16).
std::string to_hex(const PlaneKey& key);
PlaneKey plane_key_from_hex(const std::string& hex);

/// A projective plane of PG(5,q), held as its unique reduced row-echelon basis.
class Plane {
public:
    /// RREF of the span of three rows. Returns nullopt if they have rank < 3.
    static std::optional<Plane> try_span(const FieldCtx& ctx, const std::array<Vec6, 3>& rows);
    /// Same as try_span, throwing std::invalid_argument on rank < 3.
    static Plane span(const FieldCtx& ctx, const std::array<Vec6, 3>& rows);
    /// Wraps a basis already in RREF. No checks beyond debug assertions.
    static Plane from_rref(const PlaneKey& rref) { return Plane(rref); }

    const PlaneKey& key() const { return rref_; }
    Coord at(int row, int col) const { return rref_[row * 6 + col]; }
    Vec6 row(int r) const;
    /// Column of the leading 1 in each row.
    std::array<int, 3> pivots() const;

    friend auto operator<=>(const Plane&, const Plane&) = default;

private:
    explicit Plane(const PlaneKey& rref) : rref_(rref) {}
    PlaneKey rref_{};
};

/// Row-reduces a rows x 6 matrix in place to RREF. Returns the rank.
int rref_in_place(const FieldCtx& ctx, std::span<Coord> m, int rows);

/// Rank of a rows x 6 matrix (copied, not modified).
int rank_of(const FieldCtx& ctx, std::span<const Coord> m, int rows);

Plane plane_from_points(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

bool incidence(const FieldCtx& ctx, const ProjPoint& pt, const Plane& pl);

/// Projective dimension of a ∩ b: -1 (disjoint), 0 (point), 1 (line), 2 (equal).
int meet_dim(const FieldCtx& ctx, const Plane& a, const Plane& b);

/// Calls fn(ProjPoint) for each of the q^2+q+1 points of pl, in a fixed order.
template <typename Fn>
void for_each_point(const FieldCtx& ctx, const Plane& pl, Fn&& fn)
{
    const unsigned q = ctx.q();
    auto emit = [&](Coord c0, Coord c1, Coord c2) {
        ProjPoint pt;
        for (int j = 0; j < 6; ++j) {
            Coord v = ctx.base_mul(c0, pl.at(0, j));
            v = ctx.base_add(v, ctx.base_mul(c1, pl.at(1, j)));
            v = ctx.base_add(v, ctx.base_mul(c2, pl.at(2, j)));
            pt.coords[j] = v;
        }
        fn(pt);
    };
    // Coefficient vectors with first nonzero entry 1; against an RREF basis
    // this yields normalized points directly.
    for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            emit(1, Coord(a), Coord(b));
        }
    }
    for (unsigned b = 0; b < q; ++b) {
        emit(0, 1, Coord(b));
    }
    emit(0, 0, 1);
}

std::vector<ProjPoint> plane_points(const FieldCtx& ctx, const Plane& pl);

/// All (q^6-1)/(q-1) points of PG(5,q), grouped by the position of the
/// leading 1 (first position first), the rest as a base-q odometer.
std::vector<ProjPoint> all_points(const FieldCtx& ctx);

/// Dense index of a normalized point's coordinate vector, base q, first
/// coordinate most significant. Values lie in [0, q^6).
std::uint32_t vector_code(const FieldCtx& ctx, const Vec6& v);

/// Deterministic, isomorph-free listing of every plane of PG(5,q).
///
/// Order: the 20 pivot patterns (3 of 6 columns) lexicographically; within a
/// pattern the free entries, read row-major, form an odometer whose last entry
/// turns fastest. The ordinal of a plane in this order is stable, so any split
/// of [0, size()) into ranges covers every plane exactly once.
class PlaneEnumeration {
public:
    explicit PlaneEnumeration(const FieldCtx& ctx);

    std::uint64_t size() const { return total_; }
    Plane at(std::uint64_t ordinal) const;

    /// Calls fn(const Plane&) for ordinals in [begin, end).
    void for_each(std::uint64_t begin, std::uint64_t end, const std::function<void(const Plane&)>& fn) const;
    void for_each(const std::function<void(const Plane&)>& fn) const { for_each(0, total_, fn); }

private:
    struct Pattern {
        std::array<int, 3> pivots;
        std::vector<int> free_slots;  // indices into the 18-entry row-major basis
        std::uint64_t first = 0;      // ordinal of the first plane with this pattern
        std::uint64_t count = 0;
    };

    PlaneKey skeleton(const Pattern& pat) const;

    const FieldCtx* ctx_;
    std::vector<Pattern> patterns_;
    std::uint64_t total_ = 0;
};

}  // namespace hyperreg
