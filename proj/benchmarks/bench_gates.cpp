#include <benchmark/benchmark.h>

#include <string>

#include "mtcav/gates.hpp"

using namespace mtcav::gates;

namespace {

// Source segments all feeding one output, alternating phases.
GateNetwork fan_in(int n_links) {
  GateNetwork net;
  net.segments.push_back({"out", 1.0});
  for (int i = 0; i < n_links; ++i) {
    const std::string id = "in" + std::to_string(i);
    net.segments.push_back({id, 1.0});
    net.maps.push_back({id, "out", 0.5, 0.5, i % 2 ? Phase::Minus : Phase::Plus});
  }
  return net;
}

}  // namespace

static void BM_EvalAbstract(benchmark::State& state) {
  const int n_links = static_cast<int>(state.range(0));
  const GateNetwork net = fan_in(n_links);
  std::vector<int> inputs(net.segments.size(), 1);
  inputs[0] = 0;
  for (auto _ : state) {
    auto outcomes = eval_abstract(net, inputs);
    benchmark::DoNotOptimize(outcomes.size());
  }
}
BENCHMARK(BM_EvalAbstract)->Arg(8)->Arg(16)->Arg(20);

static void BM_EvalMonteCarlo(benchmark::State& state) {
  const GateNetwork net = fan_in(16);
  std::vector<int> inputs(net.segments.size(), 1);
  inputs[0] = 0;
  for (auto _ : state) {
    auto outcomes = eval_monte_carlo(net, inputs, 1000, 42);
    benchmark::DoNotOptimize(outcomes.size());
  }
}
BENCHMARK(BM_EvalMonteCarlo);
