#include <benchmark/benchmark.h>

#include "euler_forge/convolution.hpp"
#include "euler_forge/euler_exact.hpp"
#include "euler_forge/euler_mod.hpp"
#include "euler_forge/verifier.hpp"

using namespace euler_forge;

static void BM_BuildEulerCache(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(EulerCache::build(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BuildEulerCache)->Arg(100)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_SecantOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(secant_oracle(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SecantOracle)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ConvolutionTable(benchmark::State& state) {
  const auto cache = EulerCache::build(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ConvolutionTable::build(cache));
}
BENCHMARK(BM_ConvolutionTable)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_TripleConvolutionDirect(benchmark::State& state) {
  const auto cache = EulerCache::build(600);
  const auto total = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(triple_convolution_exact(total, cache));
}
BENCHMARK(BM_TripleConvolutionDirect)->Arg(100)->Arg(540)->Unit(benchmark::kMicrosecond);

// Character sum is O(p log k) per value; reduction is a single mpz_fdiv_ui.
static void BM_EulerModCharSum(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euler_mod_by_charsum(ctx, ctx.p() - 3));
}
BENCHMARK(BM_EulerModCharSum)->Arg(199)->Arg(499)->Arg(10007);

static void BM_EulerModReduction(benchmark::State& state) {
  static const auto cache = EulerCache::build(600);
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ctx.residue(cache[ctx.p() - 3]));
}
BENCHMARK(BM_EulerModReduction)->Arg(199)->Arg(499);

static void BM_EulerModRecurrence(benchmark::State& state) {
  const auto ctx = PrimeContext::build(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euler_mod_by_recurrence(ctx, ctx.p() - 1));
}
BENCHMARK(BM_EulerModRecurrence)->Arg(199)->Arg(499)->Unit(benchmark::kMicrosecond);

static void BM_ReconstructT(benchmark::State& state) {
  static const auto cache = VerificationCache::build(600);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reconstruct_t(static_cast<std::uint64_t>(state.range(0)), cache.convolutions()));
  }
}
BENCHMARK(BM_ReconstructT)->DenseRange(0, 10, 5)->Unit(benchmark::kMicrosecond);

static void BM_RunSuite(benchmark::State& state) {
  static const auto cache = VerificationCache::build(600);
  SuiteConfig config;
  config.prime_hi = 199;
  config.n_max = 10;
  config.identities = {std::begin(kAllIdentities), std::end(kAllIdentities)};
  config.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(config, cache));
}
BENCHMARK(BM_RunSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
