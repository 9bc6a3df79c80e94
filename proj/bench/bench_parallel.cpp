#include <benchmark/benchmark.h>

#include "pangular/certifier.hpp"
#include "pangular/geometry.hpp"

using namespace pangular;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_MetricAudit(benchmark::State& state) {
  const NormSpec spec = NormSpec::lp(3.0);
  for (auto _ : state) {
    auto r = metric_audit_alpha(spec, 1.5, static_cast<std::size_t>(state.range(1)), 1, 3,
                                mode(state));
    benchmark::DoNotOptimize(r.triangle.worst_slack);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_CertifyAlphaBeta(benchmark::State& state) {
  const NormSpec spec = NormSpec::identity_gram(3);
  SearchConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(1));
  cfg.execution = mode(state);
  for (auto _ : state) {
    auto v = certify_alpha_beta(spec, 2.0, cfg);
    benchmark::DoNotOptimize(v.max_margin);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_LorchProbe(benchmark::State& state) {
  const NormSpec spec = NormSpec::lp(4.0);
  SearchConfig cfg;
  cfg.samples = static_cast<std::size_t>(state.range(1));
  cfg.execution = mode(state);
  for (auto _ : state) {
    auto v = lorch_probe(spec, cfg);
    benchmark::DoNotOptimize(v.max_margin);
  }
}

}  // namespace

// range(0): 0 serial, 1 parallel; range(1): samples.
BENCHMARK(BM_MetricAudit)->ArgsProduct({{0, 1}, {20000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyAlphaBeta)->ArgsProduct({{0, 1}, {2000}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LorchProbe)->ArgsProduct({{0, 1}, {1000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
