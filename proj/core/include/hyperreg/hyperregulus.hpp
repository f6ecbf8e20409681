#pragma once

// André hyper-reguli of the field-reduction spread, their switching sets, and
// the search for every plane meeting each plane of a hyper-regulus in a point.

#include <optional>
#include <vector>

#include "hyperreg/covers.hpp"
#include "hyperreg/pg5.hpp"
#include "hyperreg/spread.hpp"

namespace hyperreg {

/// The spread elements J(m) for m in a cover, in cover order.
struct HyperRegulus {
    Cover cover;
    std::vector<Plane> planes;
};

HyperRegulus hyper_regulus(const Spread& spread, const Cover& cover);

/// Two sets of q^2+q+1 planes. Planes within a set are pairwise disjoint;
/// planes from different sets (or from a set and its hyper-regulus) meet in
/// exactly one point.
struct SwitchingPair {
    std::vector<Plane> y;
    std::vector<Plane> z;
};

/// Checks the switching property of (y, z) against the planes of x.
bool has_switching_property(const FieldCtx& ctx, const std::vector<Plane>& x, const SwitchingPair& pair);

/// Explicit switching sets of the type-I hyper-regulus N(x - a) = f:
///   Y = { {(t, a t + m t^q)}   : N(m) = f }
///   Z = { {(t, a t + m t^q^2)} : N(m) = f }
/// The result is verified against the hyper-regulus before it is returned;
/// std::logic_error is thrown if that check fails.
SwitchingPair andre_switching_sets(const Spread& spread, Elt a, Elt f);

/// Every plane meeting each plane of x in exactly one point, sorted by key.
///
/// Such a plane contains the line through its meets p1, p2 with the first two
/// planes of x, and meets some other plane of x in a point off that line. The
/// search spans p1, p2 and each point of the first plane of x that the line
/// avoids, then filters. Three fixed planes are not enough: when they lie in
/// a regulus, half the transversals meet them in collinear points.
/// jobs > 1 splits the outer loop over threads; the result does not depend on
/// the split.
std::vector<Plane> transversal_planes(const Spread& spread, const HyperRegulus& x, unsigned jobs = 1);

/// Reference search over every plane of PG(5,q). Same result, much slower.
std::vector<Plane> transversal_planes_brute_force(const Spread& spread, const HyperRegulus& x);

/// Splits transversals into two classes of pairwise-disjoint planes with all
/// cross-class meets single points. Returns nullopt if no such split exists.
/// The class containing the smallest key comes first.
std::optional<SwitchingPair> split_switching_classes(const FieldCtx& ctx, const std::vector<Plane>& transversals);

}  // namespace hyperreg
