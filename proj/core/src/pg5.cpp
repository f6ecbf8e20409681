#include "hyperreg/pg5.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hyperreg {

std::optional<ProjPoint> ProjPoint::from_vector(const FieldCtx& ctx, const Vec6& v)
{
    for (int i = 0; i < 6; ++i) {
        if (v[i] != 0) {
            const Coord s = ctx.base_inv(v[i]);
            ProjPoint pt;
            for (int j = 0; j < 6; ++j) {
                pt.coords[j] = ctx.base_mul(v[j], s);
            }
            return pt;
        }
    }
    return std::nullopt;
}

std::size_t PlaneKeyHash::operator()(const PlaneKey& k) const noexcept
{
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : k) {
        h = (h ^ b) * 1099511628211ull;
    }
    return std::size_t(h);
}

std::string to_hex(const PlaneKey& key)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(key.size(), '0');
    for (std::size_t i = 0; i < key.size(); ++i) {
        s[i] = digits[key[i] & 0xf];
    }
    return s;
}

PlaneKey plane_key_from_hex(const std::string& hex)
{
    if (hex.size() != 18) {
        throw std::invalid_argument("plane key must have 18 hex digits");
    }
    PlaneKey k{};
    for (std::size_t i = 0; i < 18; ++i) {
        const char c = hex[i];
        if (c >= '0' && c <= '9') {
            k[i] = std::uint8_t(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            k[i] = std::uint8_t(c - 'a' + 10);
        } else {
            throw std::invalid_argument("bad hex digit in plane key");
        }
    }
    return k;
}

int rref_in_place(const FieldCtx& ctx, std::span<Coord> m, int rows)
{
    int rank = 0;
    for (int col = 0; col < 6 && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r * 6 + col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        if (piv != rank) {
            for (int j = 0; j < 6; ++j) {
                std::swap(m[piv * 6 + j], m[rank * 6 + j]);
            }
        }
        const Coord s = ctx.base_inv(m[rank * 6 + col]);
        for (int j = col; j < 6; ++j) {
            m[rank * 6 + j] = ctx.base_mul(m[rank * 6 + j], s);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r * 6 + col] == 0) {
                continue;
            }
            const Coord f = m[r * 6 + col];
            for (int j = col; j < 6; ++j) {
                m[r * 6 + j] = ctx.base_sub(m[r * 6 + j], ctx.base_mul(f, m[rank * 6 + j]));
            }
        }
        ++rank;
    }
    return rank;
}

int rank_of(const FieldCtx& ctx, std::span<const Coord> m, int rows)
{
    assert(rows <= 6);
    std::array<Coord, 36> work{};
    std::copy(m.begin(), m.begin() + rows * 6, work.begin());
    // Forward elimination only.
    int rank = 0;
    for (int col = 0; col < 6 && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (work[r * 6 + col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        if (piv != rank) {
            for (int j = col; j < 6; ++j) {
                std::swap(work[piv * 6 + j], work[rank * 6 + j]);
            }
        }
        const Coord s = ctx.base_inv(work[rank * 6 + col]);
        for (int r = rank + 1; r < rows; ++r) {
            const Coord lead = work[r * 6 + col];
            if (lead == 0) {
                continue;
            }
            const Coord f = ctx.base_mul(lead, s);
            for (int j = col; j < 6; ++j) {
                work[r * 6 + j] = ctx.base_sub(work[r * 6 + j], ctx.base_mul(f, work[rank * 6 + j]));
            }
        }
        ++rank;
    }
    return rank;
}

std::optional<Plane> Plane::try_span(const FieldCtx& ctx, const std::array<Vec6, 3>& rows)
{
    PlaneKey m{};
    for (int r = 0; r < 3; ++r) {
        std::copy(rows[r].begin(), rows[r].end(), m.begin() + r * 6);
    }
    if (rref_in_place(ctx, m, 3) < 3) {
        return std::nullopt;
    }
    return Plane(m);
}

Plane Plane::span(const FieldCtx& ctx, const std::array<Vec6, 3>& rows)
{
    auto pl = try_span(ctx, rows);
    if (!pl) {
        throw std::invalid_argument("rows do not span a plane (rank < 3)");
    }
    return *pl;
}

Vec6 Plane::row(int r) const
{
    Vec6 v;
    std::copy(rref_.begin() + r * 6, rref_.begin() + r * 6 + 6, v.begin());
    return v;
}

std::array<int, 3> Plane::pivots() const
{
    std::array<int, 3> piv{};
    for (int r = 0; r < 3; ++r) {
        int c = 0;
        while (c < 6 && at(r, c) == 0) {
            ++c;
        }
        piv[r] = c;
    }
    return piv;
}

Plane plane_from_points(const FieldCtx& ctx, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c)
{
    return Plane::span(ctx, {a.coords, b.coords, c.coords});
}

bool incidence(const FieldCtx& ctx, const ProjPoint& pt, const Plane& pl)
{
    // Subtract the RREF rows weighted by the point's pivot entries; the point
    // is in the row space iff nothing remains.
    Vec6 v = pt.coords;
    const auto piv = pl.pivots();
    for (int r = 0; r < 3; ++r) {
        const Coord f = v[piv[r]];
        if (f == 0) {
            continue;
        }
        for (int j = 0; j < 6; ++j) {
            v[j] = ctx.base_sub(v[j], ctx.base_mul(f, pl.at(r, j)));
        }
    }
    for (auto x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

int meet_dim(const FieldCtx& ctx, const Plane& a, const Plane& b)
{
    std::array<Coord, 36> stacked{};
    std::copy(a.key().begin(), a.key().end(), stacked.begin());
    std::copy(b.key().begin(), b.key().end(), stacked.begin() + 18);
    const int r = rank_of(ctx, stacked, 6);
    // vector dim of the meet is 6 - r; projective dim one less.
    return 5 - r;
}

std::vector<ProjPoint> plane_points(const FieldCtx& ctx, const Plane& pl)
{
    std::vector<ProjPoint> pts;
    pts.reserve(ctx.q() * ctx.q() + ctx.q() + 1);
    for_each_point(ctx, pl, [&](const ProjPoint& p) { pts.push_back(p); });
    return pts;
}

std::vector<ProjPoint> all_points(const FieldCtx& ctx)
{
    const unsigned q = ctx.q();
    std::vector<ProjPoint> pts;
    // Leading 1 at position lead, zeros before it, anything after.
    for (int lead = 0; lead < 6; ++lead) {
        const int tail = 5 - lead;
        std::uint32_t count = 1;
        for (int i = 0; i < tail; ++i) {
            count *= q;
        }
        for (std::uint32_t n = 0; n < count; ++n) {
            ProjPoint pt;
            pt.coords[lead] = 1;
            std::uint32_t x = n;
            for (int j = 5; j > lead; --j) {
                pt.coords[j] = Coord(x % q);
                x /= q;
            }
            pts.push_back(pt);
        }
    }
    return pts;
}

std::uint32_t vector_code(const FieldCtx& ctx, const Vec6& v)
{
    std::uint32_t c = 0;
    for (auto x : v) {
        c = c * ctx.q() + x;
    }
    return c;
}

PlaneEnumeration::PlaneEnumeration(const FieldCtx& ctx) : ctx_(&ctx)
{
    const std::uint64_t q = ctx.q();
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            for (int c = b + 1; c < 6; ++c) {
                Pattern pat;
                pat.pivots = {a, b, c};
                for (int r = 0; r < 3; ++r) {
                    for (int j = pat.pivots[r] + 1; j < 6; ++j) {
                        if (j != a && j != b && j != c) {
                            pat.free_slots.push_back(r * 6 + j);
                        }
                    }
                }
                pat.first = total_;
                pat.count = 1;
                for (std::size_t i = 0; i < pat.free_slots.size(); ++i) {
                    pat.count *= q;
                }
                total_ += pat.count;
                patterns_.push_back(std::move(pat));
            }
        }
    }
}

PlaneKey PlaneEnumeration::skeleton(const Pattern& pat) const
{
    PlaneKey k{};
    for (int r = 0; r < 3; ++r) {
        k[r * 6 + pat.pivots[r]] = 1;
    }
    return k;
}

Plane PlaneEnumeration::at(std::uint64_t ordinal) const
{
    if (ordinal >= total_) {
        throw std::out_of_range("plane ordinal out of range");
    }
    const unsigned q = ctx_->q();
    for (const auto& pat : patterns_) {
        if (ordinal < pat.first + pat.count) {
            std::uint64_t x = ordinal - pat.first;
            PlaneKey k = skeleton(pat);
            for (std::size_t i = pat.free_slots.size(); i-- > 0;) {
                k[pat.free_slots[i]] = std::uint8_t(x % q);
                x /= q;
            }
            return Plane::from_rref(k);
        }
    }
    throw std::logic_error("plane ordinal not located");
}

void PlaneEnumeration::for_each(std::uint64_t begin, std::uint64_t end,
                                const std::function<void(const Plane&)>& fn) const
{
    end = std::min(end, total_);
    const auto q = std::uint8_t(ctx_->q());
    for (const auto& pat : patterns_) {
        const std::uint64_t lo = std::max(begin, pat.first);
        const std::uint64_t hi = std::min(end, pat.first + pat.count);
        if (lo >= hi) {
            continue;
        }
        PlaneKey k = at(lo).key();
        for (std::uint64_t n = lo; n < hi; ++n) {
            fn(Plane::from_rref(k));
            // Advance the odometer.
            for (std::size_t i = pat.free_slots.size(); i-- > 0;) {
                auto& digit = k[pat.free_slots[i]];
                if (++digit < q) {
                    break;
                }
                digit = 0;
            }
        }
    }
}

}  // namespace hyperreg
