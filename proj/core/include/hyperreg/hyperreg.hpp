#pragma once

#include "hyperreg/census.hpp"
#include "hyperreg/covers.hpp"
#include "hyperreg/formulas.hpp"
#include "hyperreg/gf.hpp"
#include "hyperreg/hyperregulus.hpp"
#include "hyperreg/pg5.hpp"
#include "hyperreg/spread.hpp"
