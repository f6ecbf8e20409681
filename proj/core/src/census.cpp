#include "hyperreg/census.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hyperreg/formulas.hpp"

namespace hyperreg {

namespace {

// Points per plane for q = kMaxQ.
constexpr std::size_t kMaxPlanePoints = kMaxQ * kMaxQ + kMaxQ + 1;

struct Tally {
    PlaneType tag;
    std::size_t line_slot = 0;  // C: slot met in a line; A: the slot itself
    std::array<std::uint16_t, kMaxPlanePoints> slots;
    std::size_t n = 0;
};

// Locates every point of pl and sorts the resulting spread slots.
void tally(const Spread& spread, const Plane& pl, Tally& t)
{
    const FieldCtx& ctx = spread.field();
    t.n = 0;
    for_each_point(ctx, pl, [&](const ProjPoint& pt) { t.slots[t.n++] = std::uint16_t(spread.slot(spread.locate(pt))); });
    std::sort(t.slots.begin(), t.slots.begin() + t.n);

    const std::size_t q = ctx.q();
    std::size_t distinct = 0;
    std::size_t lines = 0;
    std::size_t i = 0;
    while (i < t.n) {
        std::size_t j = i;
        while (j < t.n && t.slots[j] == t.slots[i]) {
            ++j;
        }
        const std::size_t run = j - i;
        if (run == q + 1) {
            ++lines;
            t.line_slot = t.slots[i];
        } else if (run != 1 && run != t.n) {
            throw std::logic_error("plane meets a spread element in neither a point, a line nor itself");
        }
        t.slots[distinct++] = t.slots[i];
        i = j;
    }
    if (distinct == 1) {
        t.tag = PlaneType::A;
        t.line_slot = t.slots[0];
    } else if (lines == 0 && distinct == t.n) {
        t.tag = PlaneType::B;
    } else if (lines == 1 && distinct == q * q + 1) {
        t.tag = PlaneType::C;
    } else {
        throw std::logic_error("inconsistent spread tally");
    }
    t.n = distinct;
}

struct SweepResult {
    std::uint64_t a = 0, b = 0, c = 0;
    std::unordered_map<CoverKey, std::uint64_t, CoverKeyHash> traces;

    void merge(SweepResult& other)
    {
        a += other.a;
        b += other.b;
        c += other.c;
        for (auto& [k, v] : other.traces) {
            traces[k] += v;
        }
    }
};

SweepResult sweep(const Spread& spread, unsigned jobs, bool collect_traces)
{
    const FieldCtx& ctx = spread.field();
    PlaneEnumeration planes(ctx);

    auto work = [&](std::uint64_t lo, std::uint64_t hi, SweepResult& out) {
        Tally t;
        CoverKey key;
        planes.for_each(lo, hi, [&](const Plane& pl) {
            tally(spread, pl, t);
            switch (t.tag) {
            case PlaneType::A:
                ++out.a;
                break;
            case PlaneType::C:
                ++out.c;
                break;
            case PlaneType::B:
                ++out.b;
                if (collect_traces) {
                    key.clear();
                    for (std::size_t i = 0; i < t.n; ++i) {
                        key.push_back(spread.at_slot(t.slots[i]).label);
                    }
                    ++out.traces[key];
                }
                break;
            }
        });
    };

    jobs = std::max(1u, jobs);
    std::vector<SweepResult> parts(jobs);
    const std::uint64_t total = planes.size();
    if (jobs == 1) {
        work(0, total, parts[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back(work, total * w / jobs, total * (w + 1) / jobs, std::ref(parts[w]));
        }
        for (auto& th : workers) {
            th.join();
        }
    }
    for (unsigned w = 1; w < jobs; ++w) {
        parts[0].merge(parts[w]);
    }
    return std::move(parts[0]);
}

TraceCheck evaluate_traces(const SweepResult& r, const CoverEnumeration& covers, unsigned q)
{
    TraceCheck tc;
    tc.checked = true;
    const auto index = index_covers(covers);
    tc.matched = std::all_of(r.traces.begin(), r.traces.end(),
                             [&](const auto& kv) { return index.contains(kv.first); });
    const std::uint64_t want = formulas::transversals(q);
    tc.multiplicity_ok = r.traces.size() == covers.covers.size();
    for (const auto& c : covers.covers) {
        auto it = r.traces.find(c.key());
        if (it == r.traces.end() || it->second != want) {
            tc.multiplicity_ok = false;
            break;
        }
    }
    return tc;
}

}  // namespace

const char* to_string(PlaneType t)
{
    switch (t) {
    case PlaneType::A:
        return "A";
    case PlaneType::B:
        return "B";
    case PlaneType::C:
        return "C";
    }
    return "?";
}

PlaneClass classify_plane(const Spread& spread, const Plane& pl)
{
    Tally t;
    tally(spread, pl, t);
    PlaneClass out;
    out.tag = t.tag;
    if (t.tag == PlaneType::B) {
        for (std::size_t i = 0; i < t.n; ++i) {
            out.trace.push_back(spread.at_slot(t.slots[i]));
        }
    } else {
        out.trace.push_back(spread.at_slot(t.line_slot));
    }
    return out;
}

PlaneClass classify_plane_direct(const Spread& spread, const Plane& pl)
{
    const FieldCtx& ctx = spread.field();
    std::vector<CirclePoint> points, lines, equal;
    for (std::size_t s = 0; s < spread.size(); ++s) {
        switch (meet_dim(ctx, pl, spread.elements()[s])) {
        case 0:
            points.push_back(spread.at_slot(s));
            break;
        case 1:
            lines.push_back(spread.at_slot(s));
            break;
        case 2:
            equal.push_back(spread.at_slot(s));
            break;
        default:
            break;
        }
    }
    const std::size_t q = ctx.q();
    if (equal.size() == 1 && points.empty() && lines.empty()) {
        return {PlaneType::A, equal};
    }
    if (equal.empty() && lines.empty() && points.size() == q * q + q + 1) {
        return {PlaneType::B, points};
    }
    if (equal.empty() && lines.size() == 1 && points.size() == q * q) {
        return {PlaneType::C, lines};
    }
    throw std::logic_error("plane fits no spread type");
}

CensusReport run_census(const Spread& spread, const CoverEnumeration& covers, const CensusOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    const unsigned q = spread.field().q();

    SweepResult r = sweep(spread, opts.jobs, opts.check_traces);

    CensusReport rep;
    rep.q = q;
    rep.count_a = r.a;
    rep.count_b = r.b;
    rep.count_c = r.c;
    rep.total = r.a + r.b + r.c;
    rep.covers_total = covers.total();
    rep.identity_x_eq_y = rep.count_b == rep.covers_total * formulas::transversals(q);
    if (opts.check_traces) {
        rep.trace_check = evaluate_traces(r, covers, q);
    }

    auto expect = [&](const char* name, std::uint64_t actual, std::uint64_t expected) {
        if (actual != expected) {
            rep.failures.push_back(std::string(name) + ": expected " + std::to_string(expected) + ", got " +
                                   std::to_string(actual));
        }
    };
    expect("count_a", rep.count_a, formulas::type_a(q));
    expect("count_b", rep.count_b, formulas::type_b(q));
    expect("count_c", rep.count_c, formulas::type_c(q));
    expect("total", rep.total, formulas::total_planes(q));
    expect("covers_total", rep.covers_total, formulas::covers_total(q));
    if (!rep.identity_x_eq_y) {
        rep.failures.push_back("identity_x_eq_y: count_b != covers_total * 2(q^2+q+1)");
    }
    if (rep.trace_check.checked && !(rep.trace_check.matched && rep.trace_check.multiplicity_ok)) {
        rep.failures.push_back("trace_check: type-B traces do not match the covers");
    }
    rep.passed = rep.failures.empty();
    rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CensusReport run_census(const Spread& spread, const CensusOptions& opts)
{
    return run_census(spread, enumerate_covers(spread.field()), opts);
}

TraceCheck trace_is_cover_check(const Spread& spread, const CoverEnumeration& covers, unsigned jobs)
{
    return evaluate_traces(sweep(spread, jobs, true), covers, spread.field().q());
}

}  // namespace hyperreg
