// Serial reference against the OpenMP kernels on the sampled checks.

#include <benchmark/benchmark.h>

#include "omega/gs.hpp"
#include "omega/order_check.hpp"
#include "omega/theory.hpp"

using namespace omega;

namespace {

const std::vector<std::string> kXyz = {"x", "y", "z"};

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::serial : ExecPolicy::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_VerifyTheory(benchmark::State& state, TheoryId id, std::size_t trials) {
  const SamplerConfig cfg{.trials = trials, .seed = 42};
  for (auto _ : state) {
    auto report = verify_theory(id, kXyz, std::nullopt, cfg, policy_of(state));
    if (!report.ok()) state.SkipWithError("verification failed");
    benchmark::DoNotOptimize(report);
  }
  label(state);
}

void BM_Confluence(benchmark::State& state, TheoryId id) {
  const auto t = preset(id, kXyz);
  const SamplerConfig cfg{.trials = 200, .seed = 42};
  for (auto _ : state) {
    auto report = confluence_probe(t, cfg, 5, policy_of(state));
    if (!report.ok()) state.SkipWithError("confluence failed");
    benchmark::DoNotOptimize(report);
  }
  label(state);
}

void BM_IdealProbe(benchmark::State& state, TheoryId id) {
  const auto t = preset(id, kXyz);
  const SamplerConfig cfg{.trials = 200, .seed = 42};
  for (auto _ : state) {
    auto report = ideal_probe(t, cfg, 3, policy_of(state));
    if (!report.ok()) state.SkipWithError("ideal probe failed");
    benchmark::DoNotOptimize(report);
  }
  label(state);
}

void BM_OrderLaw(benchmark::State& state) {
  const auto t = preset(TheoryId::drb, kXyz);
  const SamplerConfig cfg{.trials = 5000, .seed = 42};
  for (auto _ : state) {
    auto report = check_monomial_property(t.order, t.signature, cfg, policy_of(state));
    benchmark::DoNotOptimize(report);
  }
  label(state);
}

}  // namespace

BENCHMARK_CAPTURE(BM_VerifyTheory, rb, TheoryId::rb, 50)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyTheory, drb, TheoryId::drb, 10)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Confluence, rb, TheoryId::rb)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Confluence, drb, TheoryId::drb)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_IdealProbe, diff, TheoryId::diff)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderLaw)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
