#pragma once

// The regular 2-spread of PG(5,q) obtained by field reduction.
//
// GF(q)^6 is identified with GF(q^3)^2 through to_coords on each half. The
// spread element for m in GF(q^3) is J(m) = {(x, m*x)}, and J(inf) = {(0, y)}.
// Spread elements are labelled by the points of the circle geometry
// GF(q^3) ∪ {inf}.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperreg/gf.hpp"
#include "hyperreg/pg5.hpp"

namespace hyperreg {

/// A point of CG(3,q): an element of GF(q^3) or infinity. Infinity carries
/// the largest label so it sorts last.
struct CirclePoint {
    static constexpr std::uint16_t kInfinityLabel = 0xffff;

    std::uint16_t label = 0;

    static constexpr CirclePoint infinity() { return CirclePoint{kInfinityLabel}; }
    static constexpr CirclePoint finite(Elt m) { return CirclePoint{m.index}; }

    constexpr bool is_infinity() const { return label == kInfinityLabel; }
    constexpr Elt elt() const { return Elt{label}; }

    friend constexpr auto operator<=>(CirclePoint, CirclePoint) = default;
};

/// "inf" or the decimal element index.
std::string to_string(CirclePoint cp);

/// All q^3+1 circle points, finite labels ascending, infinity last.
std::vector<CirclePoint> circle_points(const FieldCtx& ctx);

Plane spread_element(const FieldCtx& ctx, CirclePoint m);

class Spread {
public:
    const FieldCtx& field() const { return *ctx_; }
    std::size_t size() const { return elements_.size(); }

    const Plane& element(CirclePoint m) const { return elements_[slot(m)]; }
    const std::vector<Plane>& elements() const { return elements_; }

    /// The label of the unique spread element containing pt.
    CirclePoint locate(const ProjPoint& pt) const
    {
        const auto& c = pt.coords;
        const Elt x = ctx_->from_coords(c[0], c[1], c[2]);
        const Elt y = ctx_->from_coords(c[3], c[4], c[5]);
        if (x.index == 0) {
            return CirclePoint::infinity();
        }
        return CirclePoint::finite(ctx_->div(y, x));
    }

    /// Dense slot in [0, q^3] with infinity at q^3.
    std::size_t slot(CirclePoint m) const { return m.is_infinity() ? ctx_->order() : m.label; }
    CirclePoint at_slot(std::size_t s) const
    {
        return s == ctx_->order() ? CirclePoint::infinity() : CirclePoint{std::uint16_t(s)};
    }

private:
    friend Spread build_spread(const FieldCtx& ctx);
    explicit Spread(const FieldCtx& ctx) : ctx_(&ctx) {}

    const FieldCtx* ctx_;
    std::vector<Plane> elements_;
};

/// Builds all q^3+1 elements and checks that they partition the points of
/// PG(5,q). Throws std::logic_error on a partition violation. The context
/// must outlive the spread.
Spread build_spread(const FieldCtx& ctx);

/// Slow regularity check: for every three elements A, B, C, the lines through
/// points of C meeting A and B all hit the same q+1 spread elements. Meant for
/// q <= 3.
bool check_regularity(const Spread& spread);

}  // namespace hyperreg
