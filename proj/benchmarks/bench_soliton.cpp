#include <benchmark/benchmark.h>

#include <cmath>

#include "mtcav/soliton.hpp"

using namespace mtcav::soliton;

namespace {

FieldState kink_state(int n_points) {
  GridSpec grid;
  grid.x0 = -20.0;
  grid.n_points = n_points;
  grid.dx = 60.0 / (n_points - 1);
  const double v = 0.2;
  const double c2 = 1.0 / (std::sqrt(2.0) * std::sqrt(1.0 - v * v));
  return make_kink_state(grid, KinkProfile::tanh_kink(1.0, c2, 0.0, v));
}

}  // namespace

static void BM_EvolveSteps(benchmark::State& state) {
  const FieldState initial = kink_state(static_cast<int>(state.range(0)));
  const PotentialPoly dw = PotentialPoly::double_well();
  const double dt = 0.4 * initial.grid.dx;
  for (auto _ : state) {
    EvolveResult r = evolve(initial, dw, QuantumCorrection::off(), dt, 100);
    benchmark::DoNotOptimize(r.state.u.data());
  }
  state.SetItemsProcessed(state.iterations() * 100 * state.range(0));
}
BENCHMARK(BM_EvolveSteps)->Arg(1024)->Arg(4096);

static void BM_EvolveSmeared(benchmark::State& state) {
  const FieldState initial = kink_state(2048);
  const PotentialPoly dw = PotentialPoly::double_well();
  const QuantumCorrection q = QuantumCorrection::constant(0.1);
  const double dt = 0.4 * initial.grid.dx;
  for (auto _ : state) {
    EvolveResult r = evolve(initial, dw, q, dt, 100);
    benchmark::DoNotOptimize(r.state.u.data());
  }
  state.SetItemsProcessed(state.iterations() * 100 * 2048);
}
BENCHMARK(BM_EvolveSmeared);

static void BM_Collision(benchmark::State& state) {
  GridSpec grid;
  grid.x0 = -21.0;
  grid.n_points = 1024;
  grid.dx = 42.0 / 1023;
  const PotentialPoly dw = PotentialPoly::double_well();
  for (auto _ : state) {
    FieldState s = make_kink_antikink_state(grid, 0.7, 14.0, 0.1);
    CollisionReport r = collide(std::move(s), dw, 0.4 * grid.dx, 16000);
    benchmark::DoNotOptimize(r.survivors);
  }
}
BENCHMARK(BM_Collision)->Unit(benchmark::kMillisecond);
