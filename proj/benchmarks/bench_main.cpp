#include <benchmark/benchmark.h>

#include <random>

#include "graphcomp/circle_map.hpp"
#include "graphcomp/cycle_machine.hpp"
#include "graphcomp/gate_library.hpp"
#include "graphcomp/grid_ca.hpp"
#include "graphcomp/ram.hpp"

using namespace graphcomp;

static void BM_LifeStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Machine m = build_grid_ca_machine(n, n, Neighborhood::moore_8, life_rule, "life");
    Graph g = m.input_fn(7);
    for (auto _ : state) {
        g = step(m, g);
        benchmark::DoNotOptimize(g);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_LifeStep)->Arg(8)->Arg(16)->Arg(32);

static void BM_RotationNumber(benchmark::State& state) {
    CircleMapParams p;
    p.omega = 0.38;
    p.K = 1.0;
    p.n_iter = static_cast<int>(state.range(0));
    p.n_transient = 100;
    for (auto _ : state) benchmark::DoNotOptimize(rotation_number(p));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RotationNumber)->Arg(10000)->Arg(100000);

static void BM_EnumerateCycles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    Graph g;
    for (NodeId i = 0; i < n; ++i) g.add_node(i);
    std::bernoulli_distribution edge(0.4);
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b)
            if (edge(rng)) g.add_undirected_edge(a, b);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(g, g.nodes.size()));
}
BENCHMARK(BM_EnumerateCycles)->Arg(7)->Arg(10)->Arg(12);

static void BM_GateEvaluate(benchmark::State& state) {
    GateNetwork g = build_nand1();
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            evaluate_gate(g, {TruthValue::True, TruthValue::False}, seed++));
}
BENCHMARK(BM_GateEvaluate);

static void BM_RamWriteRead(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    RamHandle h = build_ram(bits);
    int addr = 0;
    for (auto _ : state) {
        ram_write(h, addr, addr & 1);
        benchmark::DoNotOptimize(ram_read(h, addr));
        addr = (addr + 1) & ((1 << bits) - 1);
    }
}
BENCHMARK(BM_RamWriteRead)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
