#include <benchmark/benchmark.h>

#include "kklab/cover.hpp"
#include "kklab/experiments.hpp"
#include "kklab/measures.hpp"

using namespace kklab;

static void BM_mu_exact(benchmark::State& state) {
    Hypergraph h = generate(InstanceSpec::parse("triangles:v=5"));
    for (auto _ : state)
        benchmark::DoNotOptimize(mu_exact(h, 0.3).point);
}
BENCHMARK(BM_mu_exact);

static void BM_min_cover(benchmark::State& state) {
    Hypergraph h = generate(InstanceSpec::parse("perfect_matchings:v=6"));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_cover_cost(h, 0.4).cost);
}
BENCHMARK(BM_min_cover);

static void BM_q_exact(benchmark::State& state) {
    Hypergraph h = generate(InstanceSpec::parse("triangles:v=5"));
    for (auto _ : state)
        benchmark::DoNotOptimize(q_exact(h, 1e-6).q);
}
BENCHMARK(BM_q_exact);

static void BM_process(benchmark::State& state) {
    Hypergraph h = generate(InstanceSpec::parse("random_k_uniform:n=50,k=4,count=6,seed=1"));
    ScheduleParams sched = build_schedule(0.5, 4, 0.03, 50, true);
    std::uint64_t s = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_process(h, sched, Seed{++s, 0}).i_max);
}
BENCHMARK(BM_process);

BENCHMARK_MAIN();
