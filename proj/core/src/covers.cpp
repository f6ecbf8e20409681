#include "hyperreg/covers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hyperreg {

namespace {

void check_f(const FieldCtx& ctx, Elt f)
{
    if (f.index == 0 || !ctx.is_base(f)) {
        throw std::invalid_argument("cover parameter f must be a nonzero element of GF(q)");
    }
}

void check_elt(const FieldCtx& ctx, Elt x, const char* what)
{
    if (x.index >= ctx.order()) {
        throw std::invalid_argument(std::string("cover parameter ") + what + " is not an element of GF(q^3)");
    }
}

}  // namespace

std::size_t CoverKeyHash::operator()(const CoverKey& k) const noexcept
{
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k) {
        h = (h ^ (v & 0xff)) * 1099511628211ull;
        h = (h ^ (v >> 8)) * 1099511628211ull;
    }
    return std::size_t(h);
}

CoverKey Cover::key() const
{
    CoverKey k;
    k.reserve(points.size());
    for (auto p : points) {
        k.push_back(p.label);
    }
    return k;
}

bool Cover::contains(CirclePoint m) const
{
    return std::binary_search(points.begin(), points.end(), m);
}

Cover cover_type1(const FieldCtx& ctx, Elt a, Elt f)
{
    check_elt(ctx, a, "a");
    check_f(ctx, f);
    Cover c;
    c.kind = CoverKind::I;
    c.a = a;
    c.f = f;
    for (unsigned i = 0; i < ctx.order(); ++i) {
        const Elt x{std::uint16_t(i)};
        if (ctx.norm(ctx.sub(x, a)) == f) {
            c.points.push_back(CirclePoint::finite(x));
        }
    }
    return c;
}

Cover cover_type2(const FieldCtx& ctx, Elt a, Elt b, Elt f)
{
    check_elt(ctx, a, "a");
    check_elt(ctx, b, "b");
    if (a == b) {
        throw std::invalid_argument("type II cover needs a != b");
    }
    check_f(ctx, f);
    Cover c;
    c.kind = CoverKind::II;
    c.a = a;
    c.b = b;
    c.f = f;
    for (unsigned i = 0; i < ctx.order(); ++i) {
        const Elt x{std::uint16_t(i)};
        if (x == b) {
            continue;
        }
        // N is multiplicative, so N((x-a)/(x-b)) = f  <=>  N(x-a) = f * N(x-b).
        if (ctx.norm(ctx.sub(x, a)) == ctx.mul(f, ctx.norm(ctx.sub(x, b)))) {
            c.points.push_back(CirclePoint::finite(x));
        }
    }
    if (f.index == 1) {
        c.points.push_back(CirclePoint::infinity());
    }
    return c;
}

CoverEnumeration enumerate_covers(const FieldCtx& ctx)
{
    CoverEnumeration out;
    const unsigned q = ctx.q();
    const unsigned order = ctx.order();
    const std::size_t cover_size = q * q + q + 1;

    std::unordered_map<CoverKey, std::size_t, CoverKeyHash> seen;

    for (unsigned a = 0; a < order; ++a) {
        for (unsigned f = 1; f < q; ++f) {
            Cover c = cover_type1(ctx, Elt{std::uint16_t(a)}, Elt{std::uint16_t(f)});
            ++out.type1_parameters;
            out.sizes_ok = out.sizes_ok && c.points.size() == cover_size;
            auto [it, fresh] = seen.emplace(c.key(), out.covers.size());
            if (fresh) {
                out.covers.push_back(std::move(c));
                ++out.type1;
            }
        }
    }

    for (unsigned a = 0; a < order; ++a) {
        for (unsigned b = 0; b < order; ++b) {
            if (a == b) {
                continue;
            }
            for (unsigned f = 1; f < q; ++f) {
                const Elt ea{std::uint16_t(a)}, eb{std::uint16_t(b)}, ef{std::uint16_t(f)};
                Cover c = cover_type2(ctx, ea, eb, ef);
                ++out.type2_parameters;
                out.sizes_ok = out.sizes_ok && c.points.size() == cover_size;
                auto [it, fresh] = seen.emplace(c.key(), out.covers.size());
                if (fresh) {
                    out.covers.push_back(std::move(c));
                    ++out.type2;
                    continue;
                }
                ++out.duplicates_removed;
                const Cover& first = out.covers[it->second];
                if (first.kind == CoverKind::I) {
                    out.families_disjoint = false;
                    out.duplicates_are_swaps = false;
                } else if (!(first.a == eb && first.b == ea && first.f == ctx.inv(ef))) {
                    out.duplicates_are_swaps = false;
                }
            }
        }
    }
    return out;
}

std::unordered_map<CoverKey, std::size_t, CoverKeyHash> index_covers(const CoverEnumeration& all)
{
    std::unordered_map<CoverKey, std::size_t, CoverKeyHash> idx;
    idx.reserve(all.covers.size());
    for (std::size_t i = 0; i < all.covers.size(); ++i) {
        idx.emplace(all.covers[i].key(), i);
    }
    return idx;
}

std::vector<std::size_t> sample_covers(const CoverEnumeration& all, std::size_t count, std::uint64_t seed)
{
    std::vector<std::size_t> kind1, kind2;
    for (std::size_t i = 0; i < all.covers.size(); ++i) {
        (all.covers[i].kind == CoverKind::I ? kind1 : kind2).push_back(i);
    }
    std::size_t want1 = std::min(kind1.size(), count / 2);
    const std::size_t want2 = std::min(kind2.size(), count - want1);
    want1 = std::min(kind1.size(), count - want2);

    // Raw engine output only: the distribution adaptors are not portable.
    std::mt19937_64 rng(seed);
    auto draw = [&](std::vector<std::size_t>& pool, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + std::size_t(rng() % (pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
    };
    draw(kind1, want1);
    draw(kind2, want2);

    std::vector<std::size_t> out = kind1;
    out.insert(out.end(), kind2.begin(), kind2.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hyperreg
