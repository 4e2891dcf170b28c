// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "sirf/bit_sequence.hpp"
#include "sirf/stat/verdict.hpp"

namespace sirf::stat {

struct BlockResult {
  double statistic = 0.0;
  bool pass = false;
};

/// Per-block procedure A tests on one 20,000-bit block.
BlockResult ais31_t1_monobit(const BitSequence& block);
BlockResult ais31_t2_poker(const BitSequence& block);
/// statistic = number of run classes (of 12) outside bounds.
BlockResult ais31_t3_runs(const BitSequence& block);
/// statistic = longest run.
BlockResult ais31_t4_long_run(const BitSequence& block);
/// statistic = Z for the selected shift on the second half.
BlockResult ais31_t5_autocorrelation(const BitSequence& block);

/// Run counts for one block: [bit][length-1], length 6 meaning >= 6.
std::array<std::array<long, 6>, 2> ais31_run_counts(const BitSequence& block);

struct Ais31Result {
  std::vector<TestVerdict> verdicts;  // T0 .. T8 in order
  std::size_t bits_consumed = 0;
  bool all_pass() const;
};

/// Procedure A (T0, then 257 blocks through T1-T5) followed by procedure B
/// (T6a, T6b, T7a, T7b, T8) on the remaining bits, consumed sequentially.
Ais31Result ais31_suite(const BitSequence& seq);

/// Coron's statistic with L = 8, Q = 2560, K = 256000 starting at bit `first`.
TestVerdict ais31_t8_entropy(const BitSequence& seq, std::size_t first = 0);

}  // namespace sirf::stat
