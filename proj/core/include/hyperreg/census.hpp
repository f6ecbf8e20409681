#pragma once

// Classification of every plane of PG(5,q) against the spread:
//   A  the plane is a spread element
//   B  it meets q^2+q+1 spread elements, each in a single point
//   C  it meets one spread element in a line and q^2 others in a point

#include <cstdint>
#include <string>
#include <vector>

#include "hyperreg/covers.hpp"
#include "hyperreg/pg5.hpp"
#include "hyperreg/spread.hpp"

namespace hyperreg {

enum class PlaneType { A, B, C };

const char* to_string(PlaneType t);

struct PlaneClass {
    PlaneType tag = PlaneType::A;
    /// B: the spread elements met, sorted. C: the element met in a line.
    /// A: the element itself.
    std::vector<CirclePoint> trace;
};

/// Classifies by locating each point of the plane and tallying hits per
/// spread element. Throws std::logic_error if the tally fits no type.
PlaneClass classify_plane(const Spread& spread, const Plane& pl);

/// Same result computed from meet_dim against all q^3+1 spread elements.
PlaneClass classify_plane_direct(const Spread& spread, const Plane& pl);

struct TraceCheck {
    bool checked = false;
    bool matched = false;          // every type-B trace is a cover
    bool multiplicity_ok = false;  // every cover is the trace of exactly 2(q^2+q+1) planes
};

struct CensusOptions {
    unsigned jobs = 1;
    bool check_traces = false;
};

struct CensusReport {
    unsigned q = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    std::uint64_t count_c = 0;
    std::uint64_t total = 0;
    std::uint64_t covers_total = 0;
    bool identity_x_eq_y = false;
    TraceCheck trace_check;
    double runtime_seconds = 0.0;

    bool passed = false;
    std::vector<std::string> failures;  // one entry per mismatching tally
};

/// Sweeps every plane. covers supplies covers_total and the trace targets.
CensusReport run_census(const Spread& spread, const CoverEnumeration& covers, const CensusOptions& opts = {});
CensusReport run_census(const Spread& spread, const CensusOptions& opts = {});

/// Sweeps every plane and checks the type-B traces against the cover set.
TraceCheck trace_is_cover_check(const Spread& spread, const CoverEnumeration& covers, unsigned jobs = 1);

}  // namespace hyperreg
