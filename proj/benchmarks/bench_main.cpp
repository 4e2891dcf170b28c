// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "sirf/sponge_core.hpp"
#include "sirf/stat/estimators.hpp"
#include "sirf/stat/pearson.hpp"
#include "sirf/trng/pipeline.hpp"

namespace {

using namespace sirf;

DvdRaw random_dvd(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DvdRaw d;
  for (auto& x : d) x = static_cast<std::int32_t>(rng() % 1361) - 680;
  return d;
}

void BM_SpongeCycle(benchmark::State& state) {
  trng::Pipeline p{trng::RunConfig{}};
  const trng::PhaseOne phase = p.phase_one();
  for (auto _ : state) {
    const SpongeResult r = sponge_run(phase.timing, phase.nonce);
    benchmark::DoNotOptimize(r.counts.positive);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trng::kBitsPerCycle));
}
BENCHMARK(BM_SpongeCycle)->Unit(benchmark::kMillisecond);

void BM_PhaseOne(benchmark::State& state) {
  trng::Pipeline p{trng::RunConfig{}};
  for (auto _ : state) {
    const trng::PhaseOne phase = p.phase_one();
    benchmark::DoNotOptimize(phase.lfsr_seed);
  }
}
BENCHMARK(BM_PhaseOne)->Unit(benchmark::kMillisecond);

void BM_Gpev(benchmark::State& state) {
  const DvdRaw d = random_dvd(1);
  for (auto _ : state) {
    const DvdFixed c = gpev_compensate(d, 168);
    benchmark::DoNotOptimize(c[0]);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSetSize));
}
BENCHMARK(BM_Gpev);

void BM_SfChain(benchmark::State& state) {
  const DvdFixed c = gpev_compensate(random_dvd(2), 168);
  SfState sf{};
  for (auto _ : state) {
    const DvdFixed out = sf_chain(c, sf, 18);
    benchmark::DoNotOptimize(out[0]);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kSetSize));
}
BENCHMARK(BM_SfChain);

void BM_PccScan(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> sets(kIterations, std::vector<double>(kSetSize));
  for (auto& s : sets) {
    for (auto& x : s) x = g(rng);
  }
  stat::PccSampling sampling;
  sampling.mode = stat::PccSampling::Mode::random;
  sampling.pairs = static_cast<std::uint64_t>(state.range(0));
  const auto pairs = stat::sample_pairs(sets.size(), sampling);
  for (auto _ : state) {
    const stat::PccReport r = stat::pcc_scan(sets, pairs, 1);
    benchmark::DoNotOptimize(r.max_abs_r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PccScan)->Arg(10000)->Unit(benchmark::kMillisecond);

std::vector<std::uint8_t> random_bits(std::size_t n) {
  std::mt19937_64 rng(4);
  std::vector<std::uint8_t> b(n);
  for (auto& x : b) x = rng() & 1;
  return b;
}

template <double (*Estimator)(std::span<const std::uint8_t>)>
void BM_Estimator(benchmark::State& state) {
  const auto bits = random_bits(1000000);
  for (auto _ : state) benchmark::DoNotOptimize(Estimator(bits));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bits.size()));
}
BENCHMARK(BM_Estimator<stat::mcv_estimate>)->Name("BM_Mcv")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Estimator<stat::collision_estimate>)->Name("BM_Collision")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Estimator<stat::markov_estimate>)->Name("BM_Markov")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Estimator<stat::compression_estimate>)->Name("BM_Compression")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
