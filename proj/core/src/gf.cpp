#include "hyperreg/gf.hpp"

#include <string>

namespace hyperreg {

namespace {

// Polynomials over GF(p), coefficients low-degree first.
using Poly = std::vector<unsigned>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

unsigned inv_mod_p(unsigned a, unsigned p)
{
    for (unsigned x = 1; x < p; ++x) {
        if ((a * x) % p == 1) {
            return x;
        }
    }
    throw std::domain_error("no inverse mod p");
}

// Remainder of a modulo a nonzero polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, unsigned p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const unsigned lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const unsigned factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p * p - factor * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return r;
}

Poly digits(unsigned n, unsigned base, unsigned count)
{
    Poly d(count, 0);
    for (unsigned i = 0; i < count; ++i) {
        d[i] = n % base;
        n /= base;
    }
    return d;
}

unsigned undigits(const Poly& d, unsigned base)
{
    unsigned n = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
        n = n * base + d[i];
    }
    return n;
}

unsigned ipow(unsigned b, unsigned e)
{
    unsigned r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

std::string poly_string(const std::vector<unsigned>& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += (i ? "," : "") + std::to_string(c[i]);
    }
    return s + "]";
}

}  // namespace

bool is_prime(unsigned n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned n)
{
    if (n < 2) {
        return std::nullopt;
    }
    unsigned p = 2;
    while (n % p != 0) {
        ++p;
    }
    unsigned h = 0;
    while (n % p == 0) {
        n /= p;
        ++h;
    }
    if (n != 1) {
        return std::nullopt;
    }
    return std::pair{p, h};
}

bool is_irreducible_over_prime(unsigned p, const std::vector<unsigned>& poly)
{
    if (poly.size() < 2 || poly.back() != 1) {
        return false;
    }
    for (unsigned c : poly) {
        if (c >= p) {
            return false;
        }
    }
    const unsigned h = unsigned(poly.size() - 1);
    for (unsigned d = 1; d <= h / 2; ++d) {
        const unsigned count = ipow(p, d);
        for (unsigned n = 0; n < count; ++n) {
            Poly g = digits(n, p, d);
            g.push_back(1);
            if (poly_mod(poly, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

bool is_irreducible_cubic(const FieldCtx& ctx, const std::vector<unsigned>& poly)
{
    if (poly.size() != 4 || poly[3] != 1) {
        return false;
    }
    for (unsigned c : poly) {
        if (c >= ctx.q()) {
            return false;
        }
    }
    for (unsigned x = 0; x < ctx.q(); ++x) {
        // Horner: ((x + c2) x + c1) x + c0
        Coord v = 1;
        for (int i = 2; i >= 0; --i) {
            v = ctx.base_add(ctx.base_mul(v, Coord(x)), Coord(poly[i]));
        }
        if (v == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<unsigned>> irreducible_cubics(const FieldCtx& ctx)
{
    std::vector<std::vector<unsigned>> out;
    const unsigned q = ctx.q();
    for (unsigned rank = 0; rank < q * q * q; ++rank) {
        std::vector<unsigned> poly{rank % q, (rank / q) % q, rank / (q * q), 1};
        if (is_irreducible_cubic(ctx, poly)) {
            out.push_back(std::move(poly));
        }
    }
    return out;
}

Coord FieldCtx::base_inv(Coord a) const
{
    if (a == 0) {
        throw std::domain_error("GF(q): inverse of zero");
    }
    return base_exp_[(q_ - 1 - base_log_[a]) % (q_ - 1)];
}

unsigned FieldCtx::base_log(Coord a) const
{
    if (a == 0) {
        throw std::domain_error("GF(q): log of zero");
    }
    return base_log_[a];
}

Elt FieldCtx::add(Elt a, Elt b) const
{
    const auto x = to_coords(a);
    const auto y = to_coords(b);
    return from_coords(base_add(x[0], y[0]), base_add(x[1], y[1]), base_add(x[2], y[2]));
}

Elt FieldCtx::neg(Elt a) const
{
    const auto x = to_coords(a);
    return from_coords(base_neg(x[0]), base_neg(x[1]), base_neg(x[2]));
}

Elt FieldCtx::inv(Elt a) const
{
    if (a.index == 0) {
        throw std::domain_error("GF(q^3): inverse of zero");
    }
    return Elt{exp_[(order_ - 1 - log_[a.index]) % (order_ - 1)]};
}

Elt FieldCtx::pow(Elt a, std::int64_t k) const
{
    if (a.index == 0) {
        if (k < 0) {
            throw std::domain_error("GF(q^3): negative power of zero");
        }
        return Elt{std::uint16_t(k == 0 ? 1 : 0)};
    }
    const std::int64_t n = order_ - 1;
    std::int64_t e = (std::int64_t(log_[a.index]) * (k % n)) % n;
    if (e < 0) {
        e += n;
    }
    return Elt{exp_[std::size_t(e)]};
}

unsigned FieldCtx::log(Elt a) const
{
    if (a.index == 0) {
        throw std::domain_error("GF(q^3): log of zero");
    }
    return log_[a.index];
}

FieldCtx make_field(unsigned p, unsigned h, const ModulusOverrides& overrides)
{
    if (!is_prime(p)) {
        throw FieldError(std::to_string(p) + " is not prime");
    }
    if (h == 0) {
        throw FieldError("extension degree h must be at least 1");
    }
    unsigned q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > kMaxQ) {
            throw CapacityError("q = " + std::to_string(p) + "^" + std::to_string(h) +
                                " exceeds the supported maximum q = " + std::to_string(kMaxQ));
        }
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.h_ = h;
    ctx.q_ = q;
    ctx.order_ = q * q * q;

    // Base modulus.
    if (overrides.base) {
        if (overrides.base->size() != h + 1 || !is_irreducible_over_prime(p, *overrides.base)) {
            throw FieldError("base modulus " + poly_string(*overrides.base) +
                             " is not a monic irreducible of degree " + std::to_string(h) + " over GF(" +
                             std::to_string(p) + ")");
        }
        ctx.base_modulus_ = *overrides.base;
    } else {
        for (unsigned rank = 0;; ++rank) {
            Poly cand = digits(rank, p, h);
            cand.push_back(1);
            if (is_irreducible_over_prime(p, cand)) {
                ctx.base_modulus_ = std::move(cand);
                break;
            }
        }
    }

    // GF(q) tables.
    ctx.base_add_.resize(q * q);
    ctx.base_mul_.resize(q * q);
    ctx.base_neg_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        const Poly da = digits(a, p, h);
        Poly na(h);
        for (unsigned i = 0; i < h; ++i) {
            na[i] = (p - da[i]) % p;
        }
        ctx.base_neg_[a] = Coord(undigits(na, p));
        for (unsigned b = 0; b < q; ++b) {
            const Poly db = digits(b, p, h);
            Poly s(h);
            for (unsigned i = 0; i < h; ++i) {
                s[i] = (da[i] + db[i]) % p;
            }
            ctx.base_add_[a * q + b] = Coord(undigits(s, p));
            Poly m = poly_mod(poly_mul(da, db, p), ctx.base_modulus_, p);
            m.resize(h, 0);
            ctx.base_mul_[a * q + b] = Coord(undigits(m, p));
        }
    }
    ctx.base_exp_.assign(q - 1, 0);
    ctx.base_log_.assign(q, 0);
    for (unsigned g = 1; g < q; ++g) {
        unsigned order = 1;
        Coord x = Coord(g);
        while (x != 1) {
            x = ctx.base_mul_[x * q + g];
            ++order;
        }
        if (order == q - 1) {
            Coord v = 1;
            for (unsigned k = 0; k < q - 1; ++k) {
                ctx.base_exp_[k] = v;
                ctx.base_log_[v] = k;
                v = ctx.base_mul_[v * q + g];
            }
            break;
        }
    }

    // Cubic modulus.
    if (overrides.cubic) {
        if (!is_irreducible_cubic(ctx, *overrides.cubic)) {
            throw FieldError("cubic modulus " + poly_string(*overrides.cubic) +
                             " is not a monic irreducible cubic over GF(" + std::to_string(q) + ")");
        }
        ctx.cubic_modulus_ = *overrides.cubic;
    } else {
        auto all = irreducible_cubics(ctx);
        ctx.cubic_modulus_ = all.front();
    }

    // Schoolbook product in GF(q)[t] / (t^3 + c2 t^2 + c1 t + c0).
    const auto& cm = ctx.cubic_modulus_;
    const std::array<Coord, 3> red{ctx.base_neg(Coord(cm[0])), ctx.base_neg(Coord(cm[1])),
                                   ctx.base_neg(Coord(cm[2]))};
    auto slow_mul = [&](unsigned a, unsigned b) {
        const auto x = ctx.to_coords(Elt{std::uint16_t(a)});
        const auto y = ctx.to_coords(Elt{std::uint16_t(b)});
        std::array<Coord, 5> d{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                d[i + j] = ctx.base_add(d[i + j], ctx.base_mul(x[i], y[j]));
            }
        }
        for (int k = 4; k >= 3; --k) {
            // t^k = t^(k-3) * (red0 + red1 t + red2 t^2)
            for (int i = 0; i < 3; ++i) {
                d[k - 3 + i] = ctx.base_add(d[k - 3 + i], ctx.base_mul(d[k], red[i]));
            }
            d[k] = 0;
        }
        return unsigned(ctx.from_coords(d[0], d[1], d[2]).index);
    };

    const unsigned n = ctx.order_ - 1;
    for (unsigned g = 2;; ++g) {
        unsigned order = 1;
        unsigned x = g;
        while (x != 1) {
            x = slow_mul(x, g);
            ++order;
        }
        if (order == n) {
            ctx.exp_.assign(2 * n, 0);
            ctx.log_.assign(ctx.order_, 0);
            unsigned v = 1;
            for (unsigned k = 0; k < n; ++k) {
                ctx.exp_[k] = ctx.exp_[k + n] = std::uint16_t(v);
                ctx.log_[v] = k;
                v = slow_mul(v, g);
            }
            break;
        }
    }

    const unsigned norm_exp = q * q + q + 1;
    ctx.norm_.assign(ctx.order_, 0);
    for (auto& f : ctx.frob_) {
        f.assign(ctx.order_, 0);
    }
    for (unsigned x = 1; x < ctx.order_; ++x) {
        const std::uint64_t lx = ctx.log_[x];
        ctx.norm_[x] = ctx.exp_[(lx * norm_exp) % n];
        if (ctx.norm_[x] >= q) {
            throw std::logic_error("norm left the base field");
        }
        ctx.frob_[0][x] = std::uint16_t(x);
        ctx.frob_[1][x] = ctx.exp_[(lx * q) % n];
        ctx.frob_[2][x] = ctx.exp_[(lx * q * q) % n];
    }
    return ctx;
}

Elt arith(const FieldCtx& ctx, ArithOp op, Elt a, std::variant<Elt, std::int64_t> b)
{
    auto operand = [&]() {
        if (const auto* e = std::get_if<Elt>(&b)) {
            return *e;
        }
        throw std::invalid_argument("binary field operation needs an element operand");
    };
    switch (op) {
    case ArithOp::add:
        return ctx.add(a, operand());
    case ArithOp::sub:
        return ctx.sub(a, operand());
    case ArithOp::mul:
        return ctx.mul(a, operand());
    case ArithOp::div:
        return ctx.div(a, operand());
    case ArithOp::neg:
        return ctx.neg(a);
    case ArithOp::inv:
        return ctx.inv(a);
    case ArithOp::pow:
        if (const auto* k = std::get_if<std::int64_t>(&b)) {
            return ctx.pow(a, *k);
        }
        throw std::invalid_argument("pow needs an integer exponent");
    }
    throw std::invalid_argument("unknown field operation");
}

}  // namespace hyperreg
