#include <benchmark/benchmark.h>

#include <vector>

#include "hyperreg/hyperreg.hpp"

using namespace hyperreg;

static FieldCtx field_for_q(unsigned q)
{
    const auto pp = prime_power(q);
    return make_field(pp->first, pp->second);
}

static void BM_meet_dim(benchmark::State& state)
{
    const FieldCtx ctx = field_for_q(unsigned(state.range(0)));
    PlaneEnumeration planes(ctx);
    const Plane a = planes.at(planes.size() / 3);
    const Plane b = planes.at(planes.size() / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(meet_dim(ctx, a, b));
    }
}

static void BM_classify_plane(benchmark::State& state)
{
    const FieldCtx ctx = field_for_q(unsigned(state.range(0)));
    const Spread spread = build_spread(ctx);
    PlaneEnumeration planes(ctx);
    std::vector<Plane> sample;
    for (std::uint64_t i = 0; i < 256; ++i) {
        sample.push_back(planes.at(i * (planes.size() / 256)));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_plane(spread, sample[i++ & 255]));
    }
}

static void BM_census(benchmark::State& state)
{
    const FieldCtx ctx = field_for_q(unsigned(state.range(0)));
    const Spread spread = build_spread(ctx);
    const auto covers = enumerate_covers(ctx);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_census(spread, covers, CensusOptions{1, false}));
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(formulas::total_planes(ctx.q())));
}

static void BM_transversals(benchmark::State& state)
{
    const FieldCtx ctx = field_for_q(unsigned(state.range(0)));
    const Spread spread = build_spread(ctx);
    const auto x = hyper_regulus(spread, cover_type1(ctx, Elt{0}, Elt{1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(transversal_planes(spread, x));
    }
}

static void BM_enumerate_covers(benchmark::State& state)
{
    const FieldCtx ctx = field_for_q(unsigned(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_covers(ctx));
    }
}

BENCHMARK(BM_meet_dim)->Arg(2)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_classify_plane)->Arg(2)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_census)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transversals)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_covers)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
