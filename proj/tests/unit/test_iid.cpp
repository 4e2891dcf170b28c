// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "sirf/stat/iid.hpp"

namespace {

using namespace sirf;
using namespace sirf::stat;

TEST(IidRule, ScaledCounterThresholds) {
  EXPECT_FALSE(iid_counter_passes(5, 0, 10000));
  EXPECT_FALSE(iid_counter_passes(3, 2, 10000));
  EXPECT_TRUE(iid_counter_passes(6, 0, 10000));
  EXPECT_TRUE(iid_counter_passes(9994, 0, 10000));
  EXPECT_FALSE(iid_counter_passes(9995, 0, 10000));
  EXPECT_FALSE(iid_counter_passes(0, 0, 1000));
  EXPECT_TRUE(iid_counter_passes(0, 1, 1000));
  EXPECT_TRUE(iid_counter_passes(999, 0, 1000));
  EXPECT_FALSE(iid_counter_passes(1000, 0, 1000));
}

TEST(IidStatistics, HandComputedSmallSequence) {
  // bytes 0x0F 0xFF 0x00 0x3C
  const std::vector<std::uint8_t> b{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0};
  const auto s = iid_statistics(b);
  // mean 16/32; the running sum peaks at 12 against 8 after the 16th bit
  double run = 0;
  double exc = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    run += b[i];
    exc = std::max(exc, std::fabs(run - (i + 1) * 0.5));
  }
  EXPECT_EQ(s[0], exc);
  EXPECT_EQ(s[0], 4.0);
  // ones per byte: 4 8 0 4 -> steps up, down, up: 3 runs, longest 1, max(2 up, 1 down)
  EXPECT_EQ(s[1], 3.0);
  EXPECT_EQ(s[2], 1.0);
  EXPECT_EQ(s[3], 2.0);
  // runs around the median: 0000 1x12 0x10 1111 00 -> 5 runs, longest 12
  EXPECT_EQ(s[4], 5.0);
  EXPECT_EQ(s[5], 12.0);
  // byte values 15 255 0 60 are all distinct: no collision
  EXPECT_EQ(s[6], 0.0);
  EXPECT_EQ(s[7], 0.0);
  // lag 1 on (4 8 0 4): no equal neighbours; covariance 32 + 0 + 0
  EXPECT_EQ(s[8], 0.0);
  EXPECT_EQ(s[13], 32.0);
  // lag 2: (4, 0), (8, 4) -> 0 equal; covariance 0 + 32
  EXPECT_EQ(s[9], 0.0);
  EXPECT_EQ(s[14], 32.0);
  EXPECT_GT(s[18], 0.0);
}

TEST(IidStatistics, CollisionsOnByteValues) {
  // bytes 1 2 1 3 3: first collision after 2 distinct values, then scanning restarts at the repeat
  std::vector<std::uint8_t> b;
  for (int v : {1, 2, 1, 3, 3}) {
    for (int k = 7; k >= 0; --k) b.push_back((v >> k) & 1);
  }
  const auto s = iid_statistics(b);
  // from 0: 1 2 |1 -> j = 2; restart at index 3: 3 |3 -> j = 1
  EXPECT_EQ(s[6], 1.5);
  EXPECT_EQ(s[7], 2.0);
}

BitSequence random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitSequence s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, rng() & 1);
  return s;
}

TEST(IidSuite, ReproducibleAndThreadIndependent) {
  const BitSequence s = random_bits(40000, 1);
  const IidReport a = iid_permutation_suite(s, 120, 9, 1);
  const IidReport b = iid_permutation_suite(s, 120, 9, 3);
  ASSERT_EQ(a.tests.size(), 11u);
  for (std::size_t i = 0; i < 11; ++i) {
    ASSERT_EQ(a.tests[i].sub.size(), b.tests[i].sub.size());
    for (std::size_t k = 0; k < a.tests[i].sub.size(); ++k) {
      EXPECT_EQ(a.tests[i].sub[k].c0, b.tests[i].sub[k].c0);
      EXPECT_EQ(a.tests[i].sub[k].c1, b.tests[i].sub[k].c1);
    }
  }
  EXPECT_EQ(a.tests[8].sub.size(), 5u);
  EXPECT_EQ(a.tests[9].sub.size(), 5u);
  EXPECT_FALSE(a.degenerate_input);
}

TEST(IidSuite, RandomInputPasses) {
  const IidReport r = iid_permutation_suite(random_bits(100000, 4), 200, 2);
  EXPECT_TRUE(r.all_pass());
}

TEST(IidSuite, StructuredInputFails) {
  BitSequence s(100000);
  for (std::size_t i = 0; i < s.size(); ++i) s.set(i, (i / 3) % 2);
  const IidReport r = iid_permutation_suite(s, 200, 2);
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.tests[10].pass);  // compression
}

TEST(IidSuite, ConstantInputIsFlagged) {
  const IidReport r = iid_permutation_suite(BitSequence(20000), 100, 1);
  EXPECT_TRUE(r.degenerate_input);
  // every permutation equals the original, so the counters read C0 = 0, C1 = P
  for (const auto& t : r.tests) {
    for (const auto& c : t.sub) {
      EXPECT_EQ(c.c0, 0u) << c.name;
      EXPECT_EQ(c.c1, 100u) << c.name;
    }
    EXPECT_TRUE(t.pass);
  }
}

TEST(IidSuite, RejectsTooFewPermutations) {
  EXPECT_THROW(iid_permutation_suite(BitSequence(1000), 99), std::invalid_argument);
}

}  // namespace
