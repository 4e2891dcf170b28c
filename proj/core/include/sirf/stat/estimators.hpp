// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "sirf/bit_sequence.hpp"

namespace sirf::stat {

// Min-entropy estimators for binary symbols, in bits per bit. Inputs are
// unpacked (one 0/1 byte per bit).

/// p_u = min(1, p + z * sqrt(p(1-p)/(L-1))), H = -log2(p_u).
double mcv_estimate(std::span<const std::uint8_t> bits);
double collision_estimate(std::span<const std::uint8_t> bits);
double markov_estimate(std::span<const std::uint8_t> bits);
/// 6-bit blocks, 1000-block dictionary. Throws InsufficientData at <= 1000 blocks.
double compression_estimate(std::span<const std::uint8_t> bits);

struct EstimatorSuite {
  double mcv = 0.0;
  double collision = 0.0;
  double markov = 0.0;
  double compression = 0.0;
  double minimum() const;
};

EstimatorSuite estimate_all(const BitSequence& seq);

}  // namespace sirf::stat
