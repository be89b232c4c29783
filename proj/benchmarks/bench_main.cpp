#include <benchmark/benchmark.h>

#include "subcanonical/atlas.hpp"
#include "subcanonical/covers.hpp"
#include "subcanonical/semigroups.hpp"

namespace {

void BM_EnumerateCandidates(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = subc::enumerate_candidates(g);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_EnumerateCandidates)->DenseRange(6, 18, 4);

void BM_ClosureCheck(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    // hyperelliptic gap set {1, 3, ..., 2g-1}
    std::vector<int> gaps(static_cast<size_t>(g));
    for (int k = 0; k < g; ++k) gaps[static_cast<size_t>(k)] = 2 * k + 1;
    const subc::GapSet gap_set(g, std::move(gaps));
    for (auto _ : state) {
        auto result = subc::from_gaps(gap_set);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_ClosureCheck)->RangeMultiplier(2)->Range(8, 128);

void BM_CyclicCover(benchmark::State& state) {
    const subc::CoverSpec spec(5, 0, static_cast<int>(state.range(0)),
                               subc::VanishingSequence(0, {}));
    for (auto _ : state) {
        auto result = subc::cyclic_cover_vanishing(spec);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_CyclicCover)->Arg(2)->Arg(8)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
