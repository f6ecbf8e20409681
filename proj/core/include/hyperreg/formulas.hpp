#pragma once

// Closed-form counts for PG(5,q) relative to a 2-spread.

#include <cstdint>

namespace hyperreg::formulas {

constexpr std::uint64_t plane_size(std::uint64_t q) { return q * q + q + 1; }
constexpr std::uint64_t point_count(std::uint64_t q) { return (q * q * q + 1) * plane_size(q); }
constexpr std::uint64_t spread_size(std::uint64_t q) { return q * q * q + 1; }

constexpr std::uint64_t total_planes(std::uint64_t q)
{
    return (q * q * q + 1) * (q * q + 1) * (q * q * q * q + q * q * q + q * q + q + 1);
}
constexpr std::uint64_t type_a(std::uint64_t q) { return spread_size(q); }
constexpr std::uint64_t type_b(std::uint64_t q) { return q * q * q * (q * q * q + 1) * (q * q * q - 1); }
constexpr std::uint64_t type_c(std::uint64_t q) { return q * (q * q * q + 1) * plane_size(q) * plane_size(q); }

constexpr std::uint64_t covers_type1(std::uint64_t q) { return q * q * q * (q - 1); }
constexpr std::uint64_t covers_type2(std::uint64_t q) { return q * q * q * (q * q * q - 1) * (q - 1) / 2; }
constexpr std::uint64_t covers_total(std::uint64_t q) { return q * q * q * (q - 1) * (q * q * q + 1) / 2; }

/// Planes meeting every plane of a hyper-regulus in a point: 2(q^2+q+1).
constexpr std::uint64_t transversals(std::uint64_t q) { return 2 * plane_size(q); }

}  // namespace hyperreg::formulas
