// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sirf::stat {

/// Sample correlation. Throws std::invalid_argument on length mismatch or N < 2,
/// UndefinedCorrelation when either input is constant.
double pearson(std::span<const double> a, std::span<const double> b);

using SetPair = std::pair<std::uint32_t, std::uint32_t>;

struct PccSampling {
  enum class Mode { automatic, all_pairs, random };
  Mode mode = Mode::automatic;
  std::uint64_t pairs = 100000;  // random mode
  std::uint64_t seed = 1;
};

/// Pair list for K sets: every i < j, or `pairs` uniform draws of i != j (ordered i < j).
/// automatic = all pairs when K <= 256.
std::vector<SetPair> sample_pairs(std::size_t k, const PccSampling& sampling);

struct PccEntry {
  std::uint32_t i;
  std::uint32_t j;
  double r;
};

struct PccReport {
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_skipped = 0;  // touching a constant set
  std::uint64_t degenerate_sets = 0;
  double max_abs_r = 0.0;
  PccEntry max_pair{0, 0, 0.0};
  std::array<std::uint64_t, 64> histogram{};  // 64 bins over [-1, 1]
  std::vector<PccEntry> high;                 // |r| > 0.5
  std::uint64_t count_at_least(double abs_r) const;
  std::vector<double> abs_values;  // |r| for each examined pair, in pair order
};

PccReport pcc_scan(const std::vector<std::vector<double>>& sets, const std::vector<SetPair>& pairs,
                   unsigned threads = 0);
inline PccReport pcc_scan(const std::vector<std::vector<double>>& sets, const PccSampling& sampling = {},
                          unsigned threads = 0) {
  return pcc_scan(sets, sample_pairs(sets.size(), sampling), threads);
}

}  // namespace sirf::stat
