#pragma once

// Covers of the circle geometry CG(3,q) given by norm equations:
//
//   type I:  { x in GF(q^3)         : N(x - a) = f }
//   type II: { x in GF(q^3) ∪ {inf} : N((x - a)/(x - b)) = f },  a != b
//
// with f a nonzero element of GF(q). For type II the pole x = b is excluded
// and infinity belongs to the cover iff f = 1 (N((inf-a)/(inf-b)) = N(1)).

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hyperreg/gf.hpp"
#include "hyperreg/spread.hpp"

namespace hyperreg {

enum class CoverKind { I = 1, II = 2 };

/// Sorted circle-point labels, infinity last.
using CoverKey = std::vector<std::uint16_t>;

struct CoverKeyHash {
    std::size_t operator()(const CoverKey& k) const noexcept;
};

struct Cover {
    CoverKind kind = CoverKind::I;
    Elt a;
    Elt b;  // type II only
    Elt f;
    std::vector<CirclePoint> points;  // sorted

    CoverKey key() const;
    bool contains(CirclePoint m) const;
};

Cover cover_type1(const FieldCtx& ctx, Elt a, Elt f);
Cover cover_type2(const FieldCtx& ctx, Elt a, Elt b, Elt f);

/// Result of sweeping every cover parameter.
struct CoverEnumeration {
    std::vector<Cover> covers;  // one representative per key, type I first, parameter order

    std::uint64_t type1 = 0;                  // distinct type-I keys
    std::uint64_t type2 = 0;                  // distinct type-II keys
    std::uint64_t type1_parameters = 0;       // (a, f) pairs tried
    std::uint64_t type2_parameters = 0;       // (a, b, f) triples tried
    std::uint64_t duplicates_removed = 0;     // type-II triples whose key was already seen
    bool duplicates_are_swaps = true;         // every repeat was (b, a, 1/f) of the first triple
    bool families_disjoint = true;            // no key arose from both families
    bool sizes_ok = true;                     // every cover had q^2+q+1 points

    std::uint64_t total() const { return type1 + type2; }
};

CoverEnumeration enumerate_covers(const FieldCtx& ctx);

/// Index from key to position in CoverEnumeration::covers.
std::unordered_map<CoverKey, std::size_t, CoverKeyHash> index_covers(const CoverEnumeration& all);

/// Deterministic sample of `count` cover indices, split evenly between the
/// two kinds (as far as each kind allows). Same seed, same sample.
std::vector<std::size_t> sample_covers(const CoverEnumeration& all, std::size_t count, std::uint64_t seed);

}  // namespace hyperreg
