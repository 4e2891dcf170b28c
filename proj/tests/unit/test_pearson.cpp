// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "sirf/errors.hpp"
#include "sirf/stat/pearson.hpp"

namespace {

using namespace sirf;
using namespace sirf::stat;

std::vector<double> randvec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

TEST(Pearson, Examples) {
  const std::vector<double> a{1, 2, 3, 4};
  std::vector<double> neg(a);
  for (auto& x : neg) x = -x;
  EXPECT_DOUBLE_EQ(pearson(a, a), 1.0);
  EXPECT_DOUBLE_EQ(pearson(a, neg), -1.0);
  // 6.5 / sqrt(5 * 8.75)
  EXPECT_NEAR(pearson(a, std::vector<double>{1, 2, 3, 5}), 6.5 / std::sqrt(43.75), 1e-12);
  EXPECT_NEAR(pearson(a, std::vector<double>{1, 2, 3, 5}), 0.9827, 5e-5);
}

TEST(Pearson, Errors) {
  const std::vector<double> a{1, 2, 3};
  EXPECT_THROW(pearson(a, std::vector<double>{4, 4, 4}), UndefinedCorrelation);
  EXPECT_THROW(pearson(a, std::vector<double>{1, 2}), std::invalid_argument);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{1}), std::invalid_argument);
}

TEST(Pearson, SymmetryScaleInvarianceBounds) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    const auto a = randvec(rng, n);
    auto b = randvec(rng, n);
    if (trial % 5 == 0) b = a;
    const double r = pearson(a, b);
    ASSERT_GE(r, -1.0);
    ASSERT_LE(r, 1.0);
    ASSERT_NEAR(pearson(b, a), r, 1e-12);
    double c = u(rng);
    if (std::fabs(c) < 1e-3) c = 1.0;
    const double d = u(rng) * 100;
    std::vector<double> cb(b);
    for (auto& x : cb) x = c * x + d;
    ASSERT_NEAR(pearson(a, cb), (c > 0 ? 1 : -1) * r, 1e-9);
  }
}

TEST(PccScan, SamplePairs) {
  EXPECT_EQ(sample_pairs(10, {}).size(), 45u);
  PccSampling s;
  s.mode = PccSampling::Mode::random;
  s.pairs = 1000;
  const auto p = sample_pairs(2048, s);
  EXPECT_EQ(p.size(), 1000u);
  EXPECT_EQ(p, sample_pairs(2048, s));
  for (const auto& [i, j] : p) ASSERT_LT(i, j);
  EXPECT_EQ(sample_pairs(300, {}).size(), 100000u);  // above 256 sets, automatic samples
}

TEST(PccScan, IdenticalAndDegenerateSets) {
  std::mt19937_64 rng(9);
  std::vector<std::vector<double>> sets{randvec(rng, 64), randvec(rng, 64), std::vector<double>(64, 1.0)};
  sets.push_back(sets[0]);
  const PccReport r = pcc_scan(sets);
  EXPECT_EQ(r.degenerate_sets, 1u);
  EXPECT_EQ(r.pairs_examined, 3u);
  EXPECT_EQ(r.pairs_skipped, 3u);
  EXPECT_NEAR(r.max_abs_r, 1.0, 1e-12);
  EXPECT_EQ(r.max_pair.i, 0u);
  EXPECT_EQ(r.max_pair.j, 3u);
  EXPECT_EQ(std::accumulate(r.histogram.begin(), r.histogram.end(), std::uint64_t{0}), 3u);
  EXPECT_EQ(r.histogram[63], 1u);
  EXPECT_GE(r.high.size(), 1u);
  EXPECT_EQ(r.count_at_least(0.99), 1u);
}

TEST(PccScan, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(10);
  std::vector<std::vector<double>> sets;
  for (int i = 0; i < 80; ++i) sets.push_back(randvec(rng, 128));
  const PccReport a = pcc_scan(sets, sample_pairs(80, {}), 1);
  const PccReport b = pcc_scan(sets, sample_pairs(80, {}), 4);
  EXPECT_EQ(a.abs_values, b.abs_values);
  EXPECT_EQ(a.histogram, b.histogram);
}

}  // namespace
