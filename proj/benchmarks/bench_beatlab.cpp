#include <benchmark/benchmark.h>

#include "beatlab/beatfit.hpp"
#include "beatlab/perturbation.hpp"

namespace {

using namespace beatlab;

ModelParams make_params(int n_tls) {
    ModelParams p;
    p.n_tls = n_tls;
    p.g = 0.07;
    return p;
}

void BM_BuildHamiltonian(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(ModelKind::DM, params));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(2)->Arg(8)->Arg(15);

void BM_Diagonalize(benchmark::State& state) {
    const ModelParams params = make_params(static_cast<int>(state.range(0)));
    const Matrix h = build_hamiltonian(ModelKind::DM, params);
    for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h));
}
BENCHMARK(BM_Diagonalize)->Arg(2)->Arg(8)->Arg(15);

void BM_PropagateSpectral(benchmark::State& state) {
    const ModelParams params = make_params(2);
    const Basis basis(params);
    const EigenSystem es = diagonalize(build_hamiltonian(ModelKind::DM, params));
    const Vector psi0 = basis.unit_state(2, 0);
    const TimeGrid grid = TimeGrid::from_span(static_cast<double>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(propagate_spectral(es, psi0, grid));
}
BENCHMARK(BM_PropagateSpectral)->Arg(500)->Arg(3000);

void BM_ExtractBeat(benchmark::State& state) {
    const ModelParams params = make_params(2);
    const TimeGrid grid = TimeGrid::from_span(3000.0, 0.5);
    ObservableTrace trace{grid, {}};
    for (int i = 0; i < grid.count; ++i)
        trace.values.push_back(dm_photon_count_approx(params, grid.time(i)));
    for (auto _ : state) benchmark::DoNotOptimize(extract_beat(trace));
}
BENCHMARK(BM_ExtractBeat);

} // namespace

BENCHMARK_MAIN();
