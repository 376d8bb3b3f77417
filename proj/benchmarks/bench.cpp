// microbenchmarks for the hot paths: the dense eigensolver, closed-form and
// numeric amplitude tables, operator assembly, and the shot sampler.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include <lande/algebra.hpp>
#include <lande/direction.hpp>
#include <lande/engine.hpp>
#include <lande/general_j.hpp>
#include <lande/simulate.hpp>
#include <lande/spin1.hpp>

namespace {

lande::ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    lande::ComplexMatrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int f = 0; f < dim; ++f) a(i, f) = lande::complex(u(g), u(g));
    lande::ComplexMatrix h = a + a.adjoint();
    return h;
}

void BM_Eigensystem(benchmark::State& state) {
    const auto h = random_hermitian(static_cast<int>(state.range(0)), 0xBE);
    for (auto _ : state) benchmark::DoNotOptimize(lande::hermitian_eigensystem(h));
}
BENCHMARK(BM_Eigensystem)->Arg(3)->Arg(9)->Arg(15)->Arg(21);

void BM_ClosedAmplitudes(benchmark::State& state) {
    const lande::Direction a(0.8, 1.9), c(2.1, 4.4);
    for (auto _ : state) benchmark::DoNotOptimize(lande::general_amplitudes(a, c));
}
BENCHMARK(BM_ClosedAmplitudes);

void BM_ClosedProbabilities(benchmark::State& state) {
    const lande::Direction a(0.8, 1.9), c(2.1, 4.4);
    for (auto _ : state) benchmark::DoNotOptimize(lande::probability_table(a, c));
}
BENCHMARK(BM_ClosedProbabilities);

void BM_GeneralAmplitudes(benchmark::State& state) {
    const lande::SpinSystem s{static_cast<int>(state.range(0))};
    const lande::Direction a(0.8, 1.9), c(2.1, 4.4);
    for (auto _ : state) benchmark::DoNotOptimize(lande::general_amplitudes_j(s, a, c));
}
BENCHMARK(BM_GeneralAmplitudes)->Arg(2)->Arg(10)->Arg(20);

void BM_OperatorAssembly(benchmark::State& state) {
    const lande::SpinSystem s{static_cast<int>(state.range(0))};
    lande::EigenvalueWeights w;
    for (int k = 0; k < s.dim(); ++k) w.r.push_back(s.projection(k));
    const auto t = lande::general_amplitudes_j(s, lande::Direction(0.8, 1.9),
                                               lande::Direction(2.1, 4.4));
    for (auto _ : state) benchmark::DoNotOptimize(lande::operator_from_amplitudes(t, w));
}
BENCHMARK(BM_OperatorAssembly)->Arg(2)->Arg(20);

void BM_Simulate(benchmark::State& state) {
    const lande::MeasurementChain chain{lande::SpinSystem{2},
                                        lande::Direction::z_axis(),
                                        0,
                                        {lande::Direction(0.9, 0.3), lande::Direction(1.7, 2.1)}};
    const auto shots = static_cast<std::int64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(lande::simulate(chain, shots, seed++));
    state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_Simulate)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
