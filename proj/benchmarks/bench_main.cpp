#include <benchmark/benchmark.h>

#include "schubert/characters.hpp"
#include "schubert/combinat.hpp"
#include "schubert/diagram.hpp"
#include "schubert/lorentz.hpp"
#include "schubert/weyl.hpp"

using namespace schubert;

static void BM_SchubertSweep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        SchubertCache cache;
        for_each_permutation(n, [&](const Permutation& w) { benchmark::DoNotOptimize(cache.get(w)); });
    }
}
BENCHMARK(BM_SchubertSweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_MaxPolySweep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        for_each_permutation(n, [](const Permutation& w) { benchmark::DoNotOptimize(max_poly(rothe_diagram(w))); });
    }
}
BENCHMARK(BM_MaxPolySweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_DualCharacter(benchmark::State& state) {
    const Diagram d = rothe_diagram(parse_permutation("15324"));
    for (auto _ : state) benchmark::DoNotOptimize(dual_character(d));
}
BENCHMARK(BM_DualCharacter)->Unit(benchmark::kMicrosecond);

static void BM_Minor(benchmark::State& state) {
    const auto k = static_cast<int>(state.range(0));
    Column rows, cols;
    for (int i = 1; i <= k; ++i) {
        rows.push_back(i);
        cols.push_back(i + 1);
    }
    for (auto _ : state) benchmark::DoNotOptimize(minor(rows, cols));
}
BENCHMARK(BM_Minor)->DenseRange(3, 7);

static void BM_KeyLorentzian(benchmark::State& state) {
    const Poly f = key_poly(parse_composition("1,2,3,3"));
    LorentzGuard guard{12, 4};
    for (auto _ : state) benchmark::DoNotOptimize(is_lorentzian(f, guard));
}
BENCHMARK(BM_KeyLorentzian)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
