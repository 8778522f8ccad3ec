#include <benchmark/benchmark.h>

#include <random>

#include "mtcav/qteleport.hpp"

using namespace mtcav::qteleport;

static void BM_Teleport(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    TeleportTranscript t = teleport(0.6, 0.8, rng);
    benchmark::DoNotOptimize(t.fidelity);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Teleport);

static void BM_BellExpand(benchmark::State& state) {
  const PureState joint = tensor(PureState::single("A", 0.6, 0.8), make_epr("B", "C"));
  for (auto _ : state) {
    auto branches = bell_expand(joint, {"A", "B"});
    benchmark::DoNotOptimize(branches[0].weight);
  }
}
BENCHMARK(BM_BellExpand);
