#include <benchmark/benchmark.h>

#include <cmath>

#include "ns1d/diagnostics.hpp"
#include "ns1d/semidiscrete.hpp"
#include "ns1d/state.hpp"
#include "ns1d/timestepper.hpp"

namespace {

using namespace ns1d;

DiscreteState smooth_state(const Mesh& mesh) {
  DiscreteState state;
  state.tau = project_q([&](double x) { return 1.0 + 0.2 * std::sin(2.0 * M_PI * x / mesh.length); }, mesh);
  state.theta = project_q([&](double x) { return 1.0 + 0.5 * std::exp(-50.0 * (x / mesh.length - 0.5) * (x / mesh.length - 0.5)); }, mesh);
  state.u = l2_project_v([&](double x) { return 0.3 * std::sin(M_PI * x / mesh.length); }, mesh, true);
  return state;
}

void BM_rhs(benchmark::State& bench) {
  const Mesh mesh = build_mesh(1.0, static_cast<std::size_t>(bench.range(0)));
  const PhysicalParams params{.K = 1.0, .beta = 1.0};
  const TridiagonalSystem system(mesh);
  const DiscreteState state = smooth_state(mesh);
  for (auto _ : bench) {
    StateDerivative d = rhs(state, mesh, params, system);
    benchmark::DoNotOptimize(d.dtheta.values.data());
  }
  bench.SetItemsProcessed(bench.iterations() * bench.range(0));
}
BENCHMARK(BM_rhs)->RangeMultiplier(4)->Range(64, 4096);

void BM_step_ssprk3(benchmark::State& bench) {
  const Mesh mesh = build_mesh(1.0, static_cast<std::size_t>(bench.range(0)));
  const PhysicalParams params{.K = 1.0, .beta = 1.0};
  const TridiagonalSystem system(mesh);
  const DiscreteState state = smooth_state(mesh);
  const double dt = 0.1 * mesh.h * mesh.h;
  for (auto _ : bench) {
    DiscreteState next = step_ssprk3(state, dt, mesh, params, system);
    benchmark::DoNotOptimize(next.theta.values.data());
  }
  bench.SetItemsProcessed(bench.iterations() * bench.range(0));
}
BENCHMARK(BM_step_ssprk3)->RangeMultiplier(4)->Range(64, 4096);

void BM_gram_solve(benchmark::State& bench) {
  const Mesh mesh = build_mesh(1.0, static_cast<std::size_t>(bench.range(0)));
  const TridiagonalSystem system(mesh);
  VField load(mesh.n_nodes());
  for (std::size_t i = 1; i + 1 < load.size(); ++i) {
    load[i] = std::sin(0.01 * static_cast<double>(i));
  }
  for (auto _ : bench) {
    VField x = system.solve(load);
    benchmark::DoNotOptimize(x.values.data());
  }
  bench.SetItemsProcessed(bench.iterations() * bench.range(0));
}
BENCHMARK(BM_gram_solve)->RangeMultiplier(4)->Range(64, 16384);

void BM_entropy_production(benchmark::State& bench) {
  const Mesh mesh = build_mesh(1.0, static_cast<std::size_t>(bench.range(0)));
  const PhysicalParams params{.K = 1.0, .beta = 1.0};
  const DiscreteState state = smooth_state(mesh);
  for (auto _ : bench) {
    benchmark::DoNotOptimize(entropy_production(state, mesh, params));
  }
}
BENCHMARK(BM_entropy_production)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
