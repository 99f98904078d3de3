#include <benchmark/benchmark.h>

#include "qschur/oracle.hpp"

using namespace qschur;

// All benches go through uncached entry points (or distinct inputs), so the
// iterations measure real work rather than memo hits.

static void BM_RimCore(benchmark::State& state) {
    const GrassmannContext ctx(4, 5);
    const Partition big = add_full_rim_hooks(Partition{3, 2, 1}, 6, ctx);
    for (auto _ : state) {
        auto dec = core_decompose(big, ctx.hook_size());
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_RimCore);

static void BM_ClassicalLR(benchmark::State& state) {
    const Partition lambda{3, 3, 2, 1};
    const Partition mu{4, 3, 2, 1};
    const Partition rho{5, 5, 3, 3, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_lr(lambda, mu, rho));
    }
}
BENCHMARK(BM_ClassicalLR);

static void BM_TableauEnumeration(benchmark::State& state) {
    const SkewShape shape(Partition{5, 4, 3, 2}, Partition{2, 1});
    const ContentVector content{4, 4, 3};
    for (auto _ : state) {
        long long count = 0;
        for_each_tableau(shape, content, TableauKind::ordinary,
                         [&](const SkewTableau&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_TableauEnumeration);

static void BM_QlrCoefficient(benchmark::State& state) {
    const GrassmannContext ctx(5, 5);
    const Partition lambda{5, 4, 4, 2, 2};
    const Partition mu{3, 2, 1};
    const Partition nu{2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(qlr_coefficient(lambda, mu, nu, ctx));
    }
}
BENCHMARK(BM_QlrCoefficient);

static void BM_QuantumKostka(benchmark::State& state) {
    const GrassmannContext ctx(4, 5);
    const Partition lambda{5, 3, 3, 1};
    const Partition nu{2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum_kostka(lambda, {5, 2, 2}, nu, ctx));
    }
}
BENCHMARK(BM_QuantumKostka);

static void BM_QuantumPieri(benchmark::State& state) {
    const GrassmannContext ctx(6, 6);
    const Partition lambda{5, 4, 4, 2, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum_pieri(4, lambda, ctx));
    }
}
BENCHMARK(BM_QuantumPieri);

// Steady-state cost: the shared core cache is warm after the first pass,
// which is how the table and sweep paths hit this.
static void BM_PreimageEnumeration(benchmark::State& state) {
    const Partition nu{4, 2, 2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_preimages(nu, 1, 10, 6));
    }
}
BENCHMARK(BM_PreimageEnumeration);

BENCHMARK_MAIN();
