// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sirf/bit_sequence.hpp"

namespace sirf::stat {

/// Sub-statistics of the 11 permutation tests for binary input. Periodicity and
/// covariance each carry lags {1, 2, 8, 16, 32}, giving 19 values in total.
inline constexpr std::size_t kIidSubStats = 19;
inline constexpr std::array<unsigned, 5> kIidLags{1, 2, 8, 16, 32};

/// Named test index for each sub-statistic.
std::size_t iid_test_of(std::size_t sub);
const std::array<std::string, 11>& iid_test_names();
const std::array<std::string, kIidSubStats>& iid_sub_names();

/// All 19 sub-statistics of one binary sequence (0/1 bytes).
std::array<double, kIidSubStats> iid_statistics(std::span<const std::uint8_t> bits);

struct IidCounter {
  std::string name;
  double t = 0.0;
  std::uint64_t c0 = 0;  // permuted < original
  std::uint64_t c1 = 0;  // permuted == original
  bool pass = false;
};

struct IidTestResult {
  std::string name;
  std::vector<IidCounter> sub;  // one entry, or one per lag
  bool pass = false;
};

struct IidReport {
  std::uint64_t permutations = 0;
  std::vector<IidTestResult> tests;  // 11
  bool degenerate_input = false;     // constant sequence: counters are meaningless
  bool all_pass() const;
};

/// fail iff c0 + c1 <= f * P or c0 >= (1 - f) * P, f = 0.0005.
bool iid_counter_passes(std::uint64_t c0, std::uint64_t c1, std::uint64_t permutations);

/// Each permutation k is a Fisher-Yates shuffle driven by an mt19937_64 seeded from
/// (seed, k), so results do not depend on the thread count.
IidReport iid_permutation_suite(const BitSequence& seq, std::uint64_t permutations = 10000,
                                std::uint64_t seed = 1, unsigned threads = 0);

}  // namespace sirf::stat
