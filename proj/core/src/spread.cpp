#include "hyperreg/spread.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperreg {

std::string to_string(CirclePoint cp)
{
    return cp.is_infinity() ? std::string("inf") : std::to_string(cp.label);
}

std::vector<CirclePoint> circle_points(const FieldCtx& ctx)
{
    std::vector<CirclePoint> pts;
    pts.reserve(ctx.order() + 1);
    for (unsigned i = 0; i < ctx.order(); ++i) {
        pts.push_back(CirclePoint{std::uint16_t(i)});
    }
    pts.push_back(CirclePoint::infinity());
    return pts;
}

Plane spread_element(const FieldCtx& ctx, CirclePoint m)
{
    std::array<Vec6, 3> rows{};
    if (m.is_infinity()) {
        for (int i = 0; i < 3; ++i) {
            rows[i][3 + i] = 1;
        }
        return Plane::span(ctx, rows);
    }
    // Basis x = 1, t, t^2 of GF(q^3) over GF(q).
    const unsigned q = ctx.q();
    const std::array<Elt, 3> basis{Elt{1}, Elt{std::uint16_t(q)}, Elt{std::uint16_t(q * q)}};
    for (int i = 0; i < 3; ++i) {
        const auto x = ctx.to_coords(basis[i]);
        const auto y = ctx.to_coords(ctx.mul(m.elt(), basis[i]));
        rows[i] = {x[0], x[1], x[2], y[0], y[1], y[2]};
    }
    return Plane::span(ctx, rows);
}

Spread build_spread(const FieldCtx& ctx)
{
    Spread s(ctx);
    for (auto m : circle_points(ctx)) {
        s.elements_.push_back(spread_element(ctx, m));
    }

    const unsigned q = ctx.q();
    std::uint32_t space = 1;
    for (int i = 0; i < 6; ++i) {
        space *= q;
    }
    std::vector<bool> seen(space, false);
    std::uint64_t covered = 0;
    for (const auto& pl : s.elements_) {
        for_each_point(ctx, pl, [&](const ProjPoint& pt) {
            const auto code = vector_code(ctx, pt.coords);
            if (seen[code]) {
                throw std::logic_error("spread elements overlap");
            }
            seen[code] = true;
            ++covered;
        });
    }
    if (covered != (std::uint64_t(space) - 1) / (q - 1)) {
        throw std::logic_error("spread does not cover PG(5,q)");
    }
    return s;
}

bool check_regularity(const Spread& spread)
{
    const FieldCtx& ctx = spread.field();
    const auto& el = spread.elements();
    const std::size_t n = el.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto pts_b = plane_points(ctx, el[b]);
            for (std::size_t c = b + 1; c < n; ++c) {
                std::vector<std::size_t> regulus;
                bool first = true;
                for (const auto& p : plane_points(ctx, el[c])) {
                    // The transversal through p meets B in the point pb for
                    // which span(A, p, pb) is only 4-dimensional.
                    std::vector<std::size_t> hit;
                    for (const auto& pb : pts_b) {
                        std::array<Coord, 30> m{};
                        std::copy(el[a].key().begin(), el[a].key().end(), m.begin());
                        std::copy(p.coords.begin(), p.coords.end(), m.begin() + 18);
                        std::copy(pb.coords.begin(), pb.coords.end(), m.begin() + 24);
                        if (rank_of(ctx, m, 5) != 4) {
                            continue;
                        }
                        // Points of the line span(p, pb).
                        for (unsigned lam = 0; lam < ctx.q(); ++lam) {
                            Vec6 v;
                            for (int j = 0; j < 6; ++j) {
                                v[j] = ctx.base_add(ctx.base_mul(Coord(lam), p.coords[j]), pb.coords[j]);
                            }
                            hit.push_back(spread.slot(spread.locate(*ProjPoint::from_vector(ctx, v))));
                        }
                        hit.push_back(spread.slot(spread.locate(p)));
                        break;
                    }
                    std::sort(hit.begin(), hit.end());
                    if (hit.size() != ctx.q() + 1 || std::adjacent_find(hit.begin(), hit.end()) != hit.end()) {
                        return false;
                    }
                    if (first) {
                        regulus = hit;
                        first = false;
                    } else if (hit != regulus) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace hyperreg
