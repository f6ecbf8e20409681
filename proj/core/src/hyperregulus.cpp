#include "hyperreg/hyperregulus.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace hyperreg {

namespace {

using KeySet = std::unordered_set<PlaneKey, PlaneKeyHash>;

bool meets_all_in_point(const FieldCtx& ctx, const Plane& pl, const std::vector<Plane>& x)
{
    for (const auto& s : x) {
        if (meet_dim(ctx, pl, s) != 0) {
            return false;
        }
    }
    return true;
}

bool pairwise(const FieldCtx& ctx, const std::vector<Plane>& a, const std::vector<Plane>& b, int want)
{
    for (const auto& u : a) {
        for (const auto& v : b) {
            if (meet_dim(ctx, u, v) != want) {
                return false;
            }
        }
    }
    return true;
}

bool internally_disjoint(const FieldCtx& ctx, const std::vector<Plane>& a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (meet_dim(ctx, a[i], a[j]) != -1) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Plane> sorted_planes(const KeySet& keys)
{
    std::vector<Plane> out;
    out.reserve(keys.size());
    for (const auto& k : keys) {
        out.push_back(Plane::from_rref(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

HyperRegulus hyper_regulus(const Spread& spread, const Cover& cover)
{
    HyperRegulus x;
    x.cover = cover;
    x.planes.reserve(cover.points.size());
    for (auto m : cover.points) {
        x.planes.push_back(spread.element(m));
    }
    if (!internally_disjoint(spread.field(), x.planes)) {
        throw std::logic_error("hyper-regulus planes are not pairwise disjoint");
    }
    return x;
}

bool has_switching_property(const FieldCtx& ctx, const std::vector<Plane>& x, const SwitchingPair& pair)
{
    const std::size_t n = x.size();
    return pair.y.size() == n && pair.z.size() == n && internally_disjoint(ctx, pair.y) &&
           internally_disjoint(ctx, pair.z) && pairwise(ctx, pair.y, x, 0) && pairwise(ctx, pair.z, x, 0) &&
           pairwise(ctx, pair.y, pair.z, 0);
}

SwitchingPair andre_switching_sets(const Spread& spread, Elt a, Elt f)
{
    const FieldCtx& ctx = spread.field();
    const Cover cover = cover_type1(ctx, a, f);  // validates a and f
    const unsigned q = ctx.q();
    const std::array<Elt, 3> basis{Elt{1}, Elt{std::uint16_t(q)}, Elt{std::uint16_t(q * q)}};

    auto twisted = [&](Elt m, unsigned power) {
        std::array<Vec6, 3> rows{};
        for (int i = 0; i < 3; ++i) {
            const Elt t = basis[i];
            const Elt image = ctx.add(ctx.mul(a, t), ctx.mul(m, ctx.frobenius(t, power)));
            const auto u = ctx.to_coords(t);
            const auto v = ctx.to_coords(image);
            rows[i] = {u[0], u[1], u[2], v[0], v[1], v[2]};
        }
        return Plane::span(ctx, rows);
    };

    SwitchingPair pair;
    for (unsigned i = 1; i < ctx.order(); ++i) {
        const Elt m{std::uint16_t(i)};
        if (ctx.norm(m) == f) {
            pair.y.push_back(twisted(m, 1));
            pair.z.push_back(twisted(m, 2));
        }
    }
    if (!has_switching_property(ctx, hyper_regulus(spread, cover).planes, pair)) {
        throw std::logic_error("switching-set construction failed verification");
    }
    return pair;
}

std::vector<Plane> transversal_planes(const Spread& spread, const HyperRegulus& x, unsigned jobs)
{
    const FieldCtx& ctx = spread.field();
    if (x.planes.size() < 3) {
        throw std::invalid_argument("hyper-regulus has fewer than three planes");
    }
    std::vector<std::vector<ProjPoint>> pts;
    for (const auto& pl : x.planes) {
        pts.push_back(plane_points(ctx, pl));
    }
    const auto& p1 = pts[0];
    const auto& p2 = pts[1];

    auto search = [&](std::size_t begin, std::size_t end, KeySet& found) {
        KeySet tried;
        std::vector<CirclePoint> on_line;
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& b : p2) {
                // The line through the meets with the first two planes lies in
                // at most q+1 spread elements. A transversal meets some plane
                // of x off that line, and is spanned by the line and that point.
                on_line.clear();
                on_line.push_back(spread.locate(b));
                for (unsigned lam = 0; lam < ctx.q(); ++lam) {
                    Vec6 v;
                    for (int j = 0; j < 6; ++j) {
                        v[j] = ctx.base_add(p1[i].coords[j], ctx.base_mul(Coord(lam), b.coords[j]));
                    }
                    on_line.push_back(spread.locate(*ProjPoint::from_vector(ctx, v)));
                }
                std::size_t third = 2;
                while (third < pts.size() &&
                       std::find(on_line.begin(), on_line.end(), x.cover.points[third]) != on_line.end()) {
                    ++third;
                }
                if (third >= pts.size()) {
                    continue;
                }
                for (const auto& c : pts[third]) {
                    auto pl = Plane::try_span(ctx, {p1[i].coords, b.coords, c.coords});
                    if (!pl || !tried.insert(pl->key()).second) {
                        continue;
                    }
                    if (meets_all_in_point(ctx, *pl, x.planes)) {
                        found.insert(pl->key());
                    }
                }
            }
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(p1.size())));
    std::vector<KeySet> parts(jobs);
    if (jobs == 1) {
        search(0, p1.size(), parts[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::size_t lo = p1.size() * w / jobs;
            const std::size_t hi = p1.size() * (w + 1) / jobs;
            workers.emplace_back(search, lo, hi, std::ref(parts[w]));
        }
        for (auto& t : workers) {
            t.join();
        }
    }
    KeySet all;
    for (auto& part : parts) {
        all.merge(part);
    }
    return sorted_planes(all);
}

std::vector<Plane> transversal_planes_brute_force(const Spread& spread, const HyperRegulus& x)
{
    const FieldCtx& ctx = spread.field();
    std::vector<Plane> out;
    PlaneEnumeration planes(ctx);
    planes.for_each([&](const Plane& pl) {
        if (meets_all_in_point(ctx, pl, x.planes)) {
            out.push_back(pl);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<SwitchingPair> split_switching_classes(const FieldCtx& ctx, const std::vector<Plane>& transversals)
{
    if (transversals.empty()) {
        return std::nullopt;
    }
    std::vector<Plane> sorted = transversals;
    std::sort(sorted.begin(), sorted.end());

    // In the disjointness graph the two classes are cliques with no edges
    // between them, so the closed neighbourhood of any vertex is its class.
    SwitchingPair pair;
    pair.y.push_back(sorted.front());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const int d = meet_dim(ctx, sorted.front(), sorted[i]);
        if (d == -1) {
            pair.y.push_back(sorted[i]);
        } else if (d == 0) {
            pair.z.push_back(sorted[i]);
        } else {
            return std::nullopt;
        }
    }
    if (pair.y.size() != pair.z.size() || !internally_disjoint(ctx, pair.y) || !internally_disjoint(ctx, pair.z) ||
        !pairwise(ctx, pair.y, pair.z, 0)) {
        return std::nullopt;
    }
    return pair;
}

}  // namespace hyperreg
