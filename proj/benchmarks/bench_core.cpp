#include "bpscheck/charvar.hpp"
#include "bpscheck/checks.hpp"
#include "bpscheck/kac.hpp"
#include "bpscheck/plethysm.hpp"

#include <benchmark/benchmark.h>

using namespace bps;

namespace {

GradedSeries dense_series(const TruncationPolicy& pol) {
    std::vector<GradedSeries::Term> terms;
    for (int n = 0; n <= pol.t_max; ++n)
        for (int e2 = pol.e2_min; e2 <= pol.e2_max; e2 += 2)
            terms.push_back({n, e2, Int((n + 1) * 7 + e2)});
    return GradedSeries::make_series(pol, terms);
}

void SeriesMul(benchmark::State& state) {
    TruncationPolicy pol(static_cast<int>(state.range(0)), -20, 40);
    GradedSeries a = dense_series(pol), b = dense_series(pol);
    for (auto _ : state) {
        GradedSeries c = a * b;
        benchmark::DoNotOptimize(c.is_zero());
    }
}
BENCHMARK(SeriesMul)->Arg(2)->Arg(4)->Arg(6);

void Pexp(benchmark::State& state) {
    TruncationPolicy pol(static_cast<int>(state.range(0)), 0, 40);
    std::vector<GradedSeries::Term> terms;
    for (int n = 1; n <= pol.t_max; ++n)
        for (int e2 = 0; e2 <= 16; e2 += 2) terms.push_back({n, e2, Int(n + e2 + 1)});
    GradedSeries f = GradedSeries::make_series(pol, terms);
    for (auto _ : state) {
        GradedSeries g = pexp(f);
        benchmark::DoNotOptimize(g.is_zero());
    }
}
BENCHMARK(Pexp)->Arg(4)->Arg(6)->Arg(8);

void BruteRelationCount(benchmark::State& state) {
    GroupModel G = build_group(2, state.range(0));
    for (auto _ : state) {
        Int c = brute_relation_count(G, 2, G.identity());
        benchmark::DoNotOptimize(c.get_ui());
    }
}
BENCHMARK(BruteRelationCount)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void ClassCountOrbits(benchmark::State& state) {
    GroupModel G = build_group(2, state.range(0));
    for (auto _ : state) {
        Int c = class_count(G);
        benchmark::DoNotOptimize(c.get_ui());
    }
}
BENCHMARK(ClassCountOrbits)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BurnsideJordan(benchmark::State& state) {
    for (auto _ : state) {
        Int c = count_rep_classes(Quiver::jordan(), {2}, state.range(0));
        benchmark::DoNotOptimize(c.get_ui());
    }
}
BENCHMARK(BurnsideJordan)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void EcheckGenus2(benchmark::State& state) {
    CheckSpec spec;
    spec.name = "echeck";
    spec.genus = 2;
    spec.r_max = 2;
    spec.window = TruncationPolicy(2, -40, 80);
    for (auto _ : state) {
        CheckReport r = check_echeck(spec);
        if (!r.pass) state.SkipWithError("echeck failed");
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(EcheckGenus2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
