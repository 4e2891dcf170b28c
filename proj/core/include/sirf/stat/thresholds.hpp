// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>

// Every pass/fail constant used by the statistical suite.
namespace sirf::stat::thresholds {

// AIS-31 procedure A
inline constexpr std::size_t kT0Words = 1U << 16;
inline constexpr std::size_t kT0WordBits = 48;
inline constexpr std::size_t kBlockBits = 20000;
inline constexpr std::size_t kBlocks = 257;

inline constexpr long kT1OnesLow = 9654;  // exclusive
inline constexpr long kT1OnesHigh = 10346;
inline constexpr double kT2PokerLow = 1.03;  // exclusive
inline constexpr double kT2PokerHigh = 57.4;

struct RunBound {
  long lo;
  long hi;  // inclusive
};
/// Run lengths 1..5 and >= 6, same bounds for runs of zeros and of ones.
inline constexpr std::array<RunBound, 6> kT3Runs{{
    {2267, 2733}, {1079, 1421}, {502, 748}, {223, 402}, {90, 223}, {90, 223}}};
inline constexpr std::size_t kT4LongRun = 34;  // fail at >= 34
inline constexpr std::size_t kT5MaxShift = 5000;
inline constexpr std::size_t kT5Window = 5000;
inline constexpr long kT5Low = 2326;  // exclusive
inline constexpr long kT5High = 2674;

// AIS-31 procedure B
inline constexpr std::size_t kT6aBits = 100000;
inline constexpr double kT6aMaxDev = 0.025;  // |p1 - 1/2| < this
inline constexpr std::size_t kT6bPairs = 100000;
inline constexpr double kT6bMaxDiff = 0.02;
inline constexpr std::size_t kT7Tuples = 100000;
inline constexpr double kT7Chi2 = 15.13;
inline constexpr std::size_t kT8L = 8;
inline constexpr std::size_t kT8Q = 2560;
inline constexpr std::size_t kT8K = 256000;
inline constexpr double kT8MinEntropy = 7.976;  // pass at >=

// SP 800-90B
inline constexpr double kZAlpha = 2.5758293035489008;
inline constexpr double kIidFailFraction = 0.0005;  // 5 in 10,000

// Generic significance levels
inline constexpr double kNonceAlpha = 0.01;
inline constexpr double kUniformityAlpha = 0.001;

// Pearson scan
inline constexpr double kPccHighAbs = 0.5;
inline constexpr std::size_t kPccAllPairsMaxSets = 256;
inline constexpr std::size_t kPccDefaultPairs = 100000;

}  // namespace sirf::stat::thresholds
