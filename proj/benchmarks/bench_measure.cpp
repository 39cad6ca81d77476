#include <benchmark/benchmark.h>

#include <entprod/measure.hpp>
#include <entprod/models.hpp>

using namespace entprod;

namespace {

SpaceStructure qubits(int n) {
    return SpaceStructure(std::vector<Eigen::Index>(static_cast<std::size_t>(n), 2));
}

void BM_kron(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    const ComplexMatrix a =
        random_operator(SpaceStructure({dim}), RandomKind::generic, 1).matrix;
    const ComplexMatrix b =
        random_operator(SpaceStructure({dim}), RandomKind::generic, 2).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron(a, b));
    }
}
BENCHMARK(BM_kron)->Arg(4)->Arg(16)->Arg(64);

void BM_partial_trace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OperatorOnSpace a = random_operator(qubits(n), RandomKind::generic, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace_keep(a, 1));
    }
}
BENCHMARK(BM_partial_trace)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_evolve_operator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OperatorOnSpace h = random_operator(qubits(n), RandomKind::hermitian, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve_operator(h.matrix, 1.0));
    }
}
BENCHMARK(BM_evolve_operator)->Arg(2)->Arg(4)->Arg(6);

void BM_evolutional_measure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OperatorOnSpace h = ising_chain_hamiltonian(n, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolutional_measure(h, 0.7));
    }
}
BENCHMARK(BM_evolutional_measure)->Arg(2)->Arg(4)->Arg(6);

void BM_thermal_partition(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const OperatorOnSpace h = ising_chain_hamiltonian(n, 1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal_measure_partition(h, 1.0));
    }
}
BENCHMARK(BM_thermal_partition)->Arg(2)->Arg(4)->Arg(6);

} // namespace

BENCHMARK_MAIN();
