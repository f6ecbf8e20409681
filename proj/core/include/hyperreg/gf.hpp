#pragma once

// Table-driven arithmetic for the tower GF(p) ⊂ GF(q) ⊂ GF(q^3).
//
// Element encoding. An element of GF(q) is a polynomial over GF(p) of degree
// < h; its index is the base-p integer whose i-th digit (least significant
// first) is the coefficient of x^i. An element of GF(q^3) is a polynomial
// c0 + c1*t + c2*t^2 over GF(q); its index is c0 + c1*q + c2*q^2. Under this
// encoding GF(q) sits inside GF(q^3) as the indices [0, q).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace hyperreg {

/// Largest supported base field order. GF(q^3) then has at most 4096 elements.
inline constexpr unsigned kMaxQ = 16;

/// A GF(q) element index in [0, q). Matrix entries over GF(q) use this type.
using Coord = std::uint8_t;

/// An element of GF(q^3), identified by its index in [0, q^3).
struct Elt {
    std::uint16_t index = 0;

    friend constexpr auto operator<=>(Elt, Elt) = default;
};

/// Raised for a bad field request: composite p, reducible modulus, q too large.
class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when q exceeds the table capacity.
class CapacityError : public FieldError {
public:
    using FieldError::FieldError;
};

/// Optional moduli for make_field. Coefficient lists are low-degree first and
/// include the leading 1. Base-modulus coefficients lie in GF(p); cubic-modulus
/// coefficients are GF(q) element indices.
struct ModulusOverrides {
    std::optional<std::vector<unsigned>> base;
    std::optional<std::vector<unsigned>> cubic;
};

bool is_prime(unsigned n);

/// Splits n = p^h. Returns nullopt when n is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned n);

class FieldCtx {
public:
    unsigned p() const { return p_; }
    unsigned h() const { return h_; }
    unsigned q() const { return q_; }
    /// q^3, the order of the extension field.
    unsigned order() const { return order_; }

    const std::vector<unsigned>& base_modulus() const { return base_modulus_; }
    const std::vector<unsigned>& cubic_modulus() const { return cubic_modulus_; }

    Elt primitive() const { return Elt{exp_[1]}; }
    Coord base_primitive() const { return base_exp_[1]; }

    // GF(q) arithmetic on element indices.
    Coord base_add(Coord a, Coord b) const { return base_add_[a * q_ + b]; }
    Coord base_mul(Coord a, Coord b) const { return base_mul_[a * q_ + b]; }
    Coord base_neg(Coord a) const { return base_neg_[a]; }
    Coord base_sub(Coord a, Coord b) const { return base_add(a, base_neg(b)); }
    Coord base_inv(Coord a) const;
    Coord base_div(Coord a, Coord b) const { return base_mul(a, base_inv(b)); }
    /// Discrete log of a nonzero GF(q) element with respect to base_primitive().
    unsigned base_log(Coord a) const;
    Coord base_exp(unsigned k) const { return base_exp_[k % (q_ - 1)]; }

    // GF(q^3) arithmetic.
    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const
    {
        if (a.index == 0 || b.index == 0) {
            return Elt{0};
        }
        return Elt{exp_[log_[a.index] + log_[b.index]]};
    }
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    /// a^k for any integer k; negative k requires a != 0.
    Elt pow(Elt a, std::int64_t k) const;
    /// Discrete log of a nonzero element with respect to primitive().
    unsigned log(Elt a) const;
    Elt exp(std::uint64_t k) const { return Elt{exp_[k % (order_ - 1)]}; }

    /// N(x) = x^(q^2+q+1), the norm to GF(q). Always lands in [0, q).
    Elt norm(Elt x) const { return Elt{norm_[x.index]}; }
    /// x^(q^i); i is taken mod 3.
    Elt frobenius(Elt x, unsigned i) const { return Elt{frob_[i % 3][x.index]}; }
    /// True iff x lies in GF(q), equivalently x^q == x.
    bool is_base(Elt x) const { return x.index < q_; }

    /// Coordinates of x in the basis {1, t, t^2}.
    std::array<Coord, 3> to_coords(Elt x) const
    {
        const unsigned i = x.index;
        return {Coord(i % q_), Coord((i / q_) % q_), Coord(i / (q_ * q_))};
    }
    Elt from_coords(Coord c0, Coord c1, Coord c2) const
    {
        return Elt{std::uint16_t(c0 + q_ * (c1 + q_ * c2))};
    }
    Elt from_coords(const std::array<Coord, 3>& c) const { return from_coords(c[0], c[1], c[2]); }

    /// Embeds a GF(q) element into GF(q^3).
    static Elt embed(Coord c) { return Elt{c}; }

private:
    friend FieldCtx make_field(unsigned, unsigned, const ModulusOverrides&);
    FieldCtx() = default;

    unsigned p_ = 0;
    unsigned h_ = 0;
    unsigned q_ = 0;
    unsigned order_ = 0;
    std::vector<unsigned> base_modulus_;
    std::vector<unsigned> cubic_modulus_;

    std::vector<Coord> base_add_;
    std::vector<Coord> base_mul_;
    std::vector<Coord> base_neg_;
    std::vector<Coord> base_exp_;
    std::vector<unsigned> base_log_;

    std::vector<std::uint16_t> exp_;  // length 2*(order-1) so log sums need no reduction
    std::vector<unsigned> log_;
    std::vector<std::uint16_t> norm_;
    std::array<std::vector<std::uint16_t>, 3> frob_;
};

/// Builds the field context for q = p^h. Without overrides both moduli are
/// the lexicographically smallest monic irreducibles, where a polynomial is
/// ranked by the integer whose digits are its coefficients, low degree in the
/// least significant place.
FieldCtx make_field(unsigned p, unsigned h, const ModulusOverrides& overrides = {});

/// True iff the monic degree-h polynomial (coefficients low-degree first,
/// leading 1 included) over GF(p) has no monic factor of degree 1..h/2.
bool is_irreducible_over_prime(unsigned p, const std::vector<unsigned>& poly);

/// True iff the monic cubic over GF(q) (coefficients as GF(q) indices) has no
/// root in GF(q). The context only supplies GF(q) arithmetic.
bool is_irreducible_cubic(const FieldCtx& ctx, const std::vector<unsigned>& poly);

/// All monic irreducible cubics over ctx's GF(q), in the canonical order.
std::vector<std::vector<unsigned>> irreducible_cubics(const FieldCtx& ctx);

enum class ArithOp { add, sub, mul, div, neg, inv, pow };

/// Generic dispatcher. The second operand is an element for binary ops,
/// an exponent for pow and ignored for neg/inv.
Elt arith(const FieldCtx& ctx, ArithOp op, Elt a, std::variant<Elt, std::int64_t> b = Elt{});

}  // namespace hyperreg
