// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sirf/errors.hpp"
#include "sirf/stat/estimators.hpp"

namespace {

using namespace sirf;
using namespace sirf::stat;

std::vector<std::uint8_t> fixture(const char* name) {
  return read_bit_file(std::string(SIRF_FIXTURE_DIR) + "/" + name).unpack();
}

// Values printed by the public SP 800-90B reference implementation (binary
// symbols, non-IID track estimators) on the committed fixtures.
struct Reference {
  const char* file;
  double mcv;
  double collision;
  double markov;
  double compression;
};
constexpr Reference kReference[] = {
    {"sponge_1mbit.bin", 0.99530183220941504, 0.92021702752833379, 0.99808139997777923, 0.8276728750688046},
    {"alternating_1mbit.bin", 0.99628863984762794, 1.0, 0.0078125, 0.0},
    {"mt64_1mbit.bin", 0.9955837082022907, 0.95713412836806999, 0.99907970819260283, 0.85895781143226646},
};

TEST(Estimators, AgreeWithReferenceTool) {
  for (const auto& r : kReference) {
    const auto bits = fixture(r.file);
    ASSERT_EQ(bits.size(), 1000000u) << r.file;
    EXPECT_NEAR(mcv_estimate(bits), r.mcv, 1e-12) << r.file;
    EXPECT_NEAR(collision_estimate(bits), r.collision, 1e-12) << r.file;
    EXPECT_NEAR(markov_estimate(bits), r.markov, 1e-12) << r.file;
    EXPECT_NEAR(compression_estimate(bits), r.compression, 1e-6) << r.file;
  }
}

TEST(Estimators, McvBalancedMillion) {
  std::vector<std::uint8_t> b(1000000, 0);
  for (std::size_t i = 0; i < b.size(); i += 2) b[i] = 1;
  const double pu = 0.5 + 2.5758293035489008 * std::sqrt(0.25 / 999999.0);
  EXPECT_NEAR(mcv_estimate(b), -std::log2(pu), 1e-12);
  EXPECT_NEAR(mcv_estimate(b), 0.9963, 5e-5);
}

TEST(Estimators, AllOnes) {
  std::vector<std::uint8_t> b(1000000, 1);
  EXPECT_EQ(mcv_estimate(b), 0.0);
  EXPECT_EQ(markov_estimate(b), 0.0);
}

TEST(Estimators, AlternatingMarkovNearZero) {
  std::vector<std::uint8_t> b(1000000, 0);
  for (std::size_t i = 1; i < b.size(); i += 2) b[i] = 1;
  EXPECT_LT(markov_estimate(b), 0.01);
}

TEST(Estimators, McvMonotoneInMajorityCount) {
  std::vector<std::uint8_t> b(100000, 0);
  for (std::size_t i = 0; i < 50000; ++i) b[i] = 1;
  double prev = mcv_estimate(b);
  for (std::size_t i = 50000; i < 60000; i += 500) {
    for (std::size_t k = i; k < i + 500; ++k) b[k] = 1;
    const double h = mcv_estimate(b);
    ASSERT_LE(h, prev);
    prev = h;
  }
}

TEST(Estimators, RangeProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int bias = 50 + trial * 4;
    std::vector<std::uint8_t> b(60000);
    for (auto& x : b) x = static_cast<std::uint8_t>(static_cast<int>(rng() % 100) < bias);
    for (double h : {mcv_estimate(b), collision_estimate(b), markov_estimate(b), compression_estimate(b)}) {
      ASSERT_GE(h, 0.0);
      ASSERT_LE(h, 1.0);
    }
  }
}

TEST(Estimators, CompressionNeedsEnoughBlocks) {
  EXPECT_THROW(compression_estimate(std::vector<std::uint8_t>(6005, 0)), InsufficientData);
  EXPECT_NO_THROW(compression_estimate(std::vector<std::uint8_t>(6006, 0)));
}

TEST(Estimators, SuiteMinimum) {
  const EstimatorSuite s{0.9, 0.8, 0.95, 0.85};
  EXPECT_EQ(s.minimum(), 0.8);
}

}  // namespace
