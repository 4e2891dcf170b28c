// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sirf/stat/estimators.hpp"
#include "sirf/stat/pearson.hpp"
#include "sirf/trng/config.hpp"

namespace sirf::trng {

struct PccExperiment {
  stat::PccReport chained;
  stat::PccReport unchained;
  std::uint64_t pairs_sampled = 0;
};

/// One phase-one measurement, run through the sponge with and without SF
/// chaining; both scans use the same pair list.
PccExperiment experiment_pcc(const RunConfig& cfg, const stat::PccSampling& sampling);

struct RcTccCell {
  bool rc_randomized;
  bool tcc_randomized;
  std::vector<stat::EstimatorSuite> per_device;
  double median_minimum() const;
};

struct RcTccExperiment {
  std::vector<std::uint64_t> device_seeds;
  std::uint64_t bits_per_device = 0;
  std::array<RcTccCell, 4> cells;  // (off,off) (off,on) (on,off) (on,on), rc first
  const RcTccCell& cell(bool rc, bool tcc) const { return cells[(rc ? 2 : 0) + (tcc ? 1 : 0)]; }
};

/// For each device, every cycle's phase one is measured once and fed to all four
/// RC/TCC configurations, so the DVs are identical across cells.
RcTccExperiment experiment_rc_tcc(const RunConfig& cfg, const std::vector<std::uint64_t>& device_seeds,
                                  std::uint64_t bits_per_device);

struct EnvPoint {
  EnvCondition env;
  double divergence = 0.0;  // Hamming fraction vs baseline
  bool nonce_matches_baseline = true;
};

/// Baseline is cfg with the identity environment; each sweep point reruns
/// cfg.bits with the same seeds.
std::vector<EnvPoint> experiment_env_attack(const RunConfig& cfg, const std::vector<EnvCondition>& sweep);

}  // namespace sirf::trng
