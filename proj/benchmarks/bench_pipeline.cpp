#include <benchmark/benchmark.h>

#include "canderson/experiments.hpp"
#include "canderson/hamiltonian.hpp"
#include "canderson/metrics.hpp"
#include "canderson/spectral.hpp"

using namespace canderson;

namespace {

ModelConfig oscillator(int sites) {
  ModelConfig c;
  c.model = Model::oscillator1d;
  c.basis = InternalBasis::oscillator(0.1);
  c.disorder = 5.0;
  c.set_sites(sites);
  return c;
}

ModelConfig rotor(int sites) {
  ModelConfig c;
  c.model = Model::rotor2d;
  c.basis = InternalBasis::rotor(2.0, 0.25);
  c.disorder = 4.0;
  c.set_sites(sites);
  return c;
}

void BM_BuildOscillator(benchmark::State& state) {
  const auto c = oscillator(static_cast<int>(state.range(0)));
  const auto dis = sample_model_disorder(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(c, dis));
}
BENCHMARK(BM_BuildOscillator)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BuildRotor(benchmark::State& state) {
  const auto c = rotor(static_cast<int>(state.range(0)));
  const auto dis = sample_model_disorder(c, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(c, dis));
}
BENCHMARK(BM_BuildRotor)->Arg(400)->Arg(900)->Unit(benchmark::kMillisecond);

void BM_SolveOscillator(benchmark::State& state) {
  set_blas_threads(1);
  const auto c = oscillator(static_cast<int>(state.range(0)));
  const auto h = build_hamiltonian(c, sample_model_disorder(c, 1));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
  state.SetLabel("N = " + std::to_string(h.dimension()));
}
BENCHMARK(BM_SolveOscillator)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveRotor(benchmark::State& state) {
  set_blas_threads(1);
  const auto c = rotor(static_cast<int>(state.range(0)));
  const auto h = build_hamiltonian(c, sample_model_disorder(c, 1));
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
  state.SetLabel("N = " + std::to_string(h.dimension()));
}
BENCHMARK(BM_SolveRotor)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SpectrumMetrics(benchmark::State& state) {
  const auto c = oscillator(static_cast<int>(state.range(0)));
  const auto sol = eigendecompose(build_hamiltonian(c, sample_model_disorder(c, 1)));
  const auto hr = translational_operator(c);
  const BasisLayout layout{c.sites(), c.internal_dimension()};
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_metrics(sol, layout, hr));
}
BENCHMARK(BM_SpectrumMetrics)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Realization(benchmark::State& state) {
  const auto c = oscillator(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_single_realization(c, i++, 1));
}
BENCHMARK(BM_Realization)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
