#include "a1tk/a1.hpp"
#include "a1tk/generators.hpp"
#include "a1tk/rearrange.hpp"
#include "a1tk/reverse_holder.hpp"

#include <benchmark/benchmark.h>

using namespace a1tk;

namespace {

void BM_A1Exact(benchmark::State& state) {
    StepWeight w = gen_bounded_ratio(static_cast<std::size_t>(state.range(0)), 8.0, 1);
    for (auto _ : state) {
        A1Report r = a1_constant(w);
        benchmark::DoNotOptimize(r.constant);
    }
}
BENCHMARK(BM_A1Exact)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

void BM_A1Bruteforce(benchmark::State& state) {
    StepWeight w = gen_bounded_ratio(16, 8.0, 2);
    auto grid = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        double bf = a1_constant_bruteforce(w, grid);
        benchmark::DoNotOptimize(bf);
    }
}
BENCHMARK(BM_A1Bruteforce)->RangeMultiplier(4)->Range(1024, 16384)->Unit(benchmark::kMillisecond);

void BM_Rearrange(benchmark::State& state) {
    StepWeight w = gen_bounded_ratio(static_cast<std::size_t>(state.range(0)), 8.0, 3);
    for (auto _ : state) {
        Weight star = decreasing_rearrangement(w);
        benchmark::DoNotOptimize(star);
    }
}
BENCHMARK(BM_Rearrange)->RangeMultiplier(8)->Range(1024, 65536)->Unit(benchmark::kMicrosecond);

void BM_HardyConstant(benchmark::State& state) {
    StepWeight g = gen_nonincreasing_hardy(static_cast<std::size_t>(state.range(0)), 2.0, 4);
    for (auto _ : state) {
        HardyReport r = hardy_constant(g);
        benchmark::DoNotOptimize(r.constant);
    }
}
BENCHMARK(BM_HardyConstant)->RangeMultiplier(8)->Range(1024, 65536)->Unit(benchmark::kMicrosecond);

void BM_Theorem2(benchmark::State& state) {
    StepWeight w = gen_bounded_ratio(static_cast<std::size_t>(state.range(0)), 2.0, 5);
    double c = a1_constant(w).constant;
    double p = 0.5 * (1.0 + p_critical(c));
    for (auto _ : state) {
        RHReport r = verify_theorem2(w, p, 1e-9);
        benchmark::DoNotOptimize(r.worst_ratio);
    }
}
BENCHMARK(BM_Theorem2)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_Lemma1Residual(benchmark::State& state) {
    StepWeight g = gen_nonincreasing_hardy(static_cast<std::size_t>(state.range(0)), 2.0, 6);
    for (auto _ : state) {
        Lemma1Report r = lemma1_residual(g, 2.0, 1.0);
        benchmark::DoNotOptimize(r.residual);
    }
}
BENCHMARK(BM_Lemma1Residual)->RangeMultiplier(4)->Range(8, 128)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
