// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "sirf/errors.hpp"
#include "sirf/trng/experiments.hpp"
#include "sirf/trng/pipeline.hpp"

namespace {

using namespace sirf;
using namespace sirf::trng;

TEST(Pipeline, CycleArithmetic) {
  EXPECT_EQ(cycles_for(1), 1u);
  EXPECT_EQ(cycles_for(kBitsPerCycle), 1u);
  EXPECT_EQ(cycles_for(kBitsPerCycle + 1), 2u);
  EXPECT_EQ(cycles_for(80000000), 20u);
  EXPECT_EQ(cycles_for(8000000), 2u);
}

TEST(Pipeline, OneCycleYield) {
  RunConfig cfg;
  RunReport rep;
  const BitSequence bits = generate_bits(cfg, &rep);
  EXPECT_EQ(bits.size(), kBitsPerCycle);
  EXPECT_EQ(bits.bytes().size(), 524288u);
  EXPECT_EQ(rep.cycles, 1u);
  EXPECT_EQ(rep.bits_emitted, kBitsPerCycle);
  EXPECT_EQ(rep.clamp_events, 0u);
}

TEST(Pipeline, WholeCyclesAndEarlyStop) {
  RunConfig cfg;
  cfg.bits = kBitsPerCycle + 5;
  int calls = 0;
  const RunReport rep = run_trng(cfg, [&](const BitSequence& b) {
    EXPECT_EQ(b.size(), kBitsPerCycle);
    ++calls;
    return false;
  });
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(rep.cycles, 1u);
}

TEST(Pipeline, BootstrapUsesSeedOneEveryCycle) {
  RunConfig cfg;
  Pipeline p(cfg);
  const PhaseOne a = p.phase_one();
  const PhaseOne b = p.phase_one();
  // same challenges, fresh noise: nonces differ but the distributions come from the same paths
  EXPECT_NE(a.nonce, b.nonce);
  EXPECT_NE(a.lfsr_seed, b.lfsr_seed);
}

TEST(Pipeline, DeterministicAndSeedSensitive) {
  RunConfig cfg;
  const BitSequence a = generate_bits(cfg);
  EXPECT_EQ(a, generate_bits(cfg));
  for (int which = 0; which < 2; ++which) {
    RunConfig c = cfg;
    (which ? c.noise_seed : c.device_seed) = 2;
    const double h = hamming_fraction(a, generate_bits(c));
    EXPECT_NEAR(h, 0.5, 0.01) << which;
  }
}

TEST(Pipeline, IntegerTemperatureOffsetsLeaveOutputUnchanged) {
  RunConfig cfg;
  const auto pts = experiment_env_attack(cfg, {{10, 1.0}, {-7, 1.0}, {50, 1.0}});
  for (const auto& p : pts) {
    EXPECT_EQ(p.divergence, 0.0) << p.env.temp_offset;
    EXPECT_TRUE(p.nonce_matches_baseline);
  }
}

TEST(Pipeline, ConfigValidation) {
  RunConfig cfg;
  cfg.rc_randomized = false;
  cfg.fixed_rc = 200;
  EXPECT_THROW(Pipeline{cfg}, ConfigError);
}

TEST(Pipeline, NonceCollection) {
  RunConfig cfg;
  const auto n = collect_nonces(cfg, 3);
  ASSERT_EQ(n.size(), 3u);
  EXPECT_NE(n[0], n[1]);
  EXPECT_EQ(collect_nonces(cfg, 3), n);
}

}  // namespace
