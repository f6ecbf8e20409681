#pragma once

#include <doctest.h>

#include "hyperreg/hyperreg.hpp"

inline hyperreg::FieldCtx field_q(unsigned q)
{
    const auto pp = hyperreg::prime_power(q);
    REQUIRE(pp.has_value());
    return hyperreg::make_field(pp->first, pp->second);
}

inline hyperreg::Elt elt(unsigned i) { return hyperreg::Elt{std::uint16_t(i)}; }
