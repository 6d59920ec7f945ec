#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "powmon/constructors.hpp"
#include "powmon/factorizer.hpp"
#include "powmon/finset.hpp"

using namespace powmon;

namespace {

FinSet random_set(std::mt19937_64& rng, std::uint64_t max_element) {
    std::vector<std::uint64_t> elems{0};
    for (std::uint64_t v = 1; v <= max_element; ++v)
        if (rng() & 1) elems.push_back(v);
    return FinSet::from_elements(std::move(elems));
}

void bm_sumset_bits(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const FinSet a = random_set(rng, static_cast<std::uint64_t>(state.range(0)));
    const FinSet b = random_set(rng, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(bm_sumset_bits)->Arg(64)->Arg(512)->Arg(3000);

void bm_sumset_merge(benchmark::State& state) {
    std::mt19937_64 rng(2);
    // spread the elements beyond the dense-result limit so the heap-merge
    // path runs
    const std::uint64_t stretch = std::uint64_t{1} << 24;
    const FinSet a = dilate(random_set(rng, 60), stretch);
    const FinSet b = dilate(random_set(rng, 60), stretch);
    for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(bm_sumset_merge);

void bm_is_atom_witness(benchmark::State& state) {
    const FinSet x = interval_three(2);
    for (auto _ : state) {
        Factorizer fz; // fresh: no memo effects
        benchmark::DoNotOptimize(fz.is_atom(x));
    }
}
BENCHMARK(bm_is_atom_witness);

void bm_divisors_witness(benchmark::State& state) {
    const FinSet x = interval_three(2);
    for (auto _ : state) {
        Factorizer fz;
        benchmark::DoNotOptimize(fz.divisors(x));
    }
}
BENCHMARK(bm_divisors_witness);

void bm_factorize_ladder2(benchmark::State& state) {
    const FinSet s2 = build_ladder(2).top();
    for (auto _ : state) {
        Factorizer fz;
        benchmark::DoNotOptimize(fz.factorizations(s2));
    }
}
BENCHMARK(bm_factorize_ladder2);

void bm_factorize_interval(benchmark::State& state) {
    const FinSet x = interval_three(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        Factorizer fz;
        benchmark::DoNotOptimize(fz.factorizations(x));
    }
}
BENCHMARK(bm_factorize_interval)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
