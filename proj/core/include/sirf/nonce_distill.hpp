// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bitset>
#include <cstdint>
#include <string>

#include "sirf/bit_sequence.hpp"

namespace sirf {

inline constexpr std::size_t kNonceBits = 341;
inline constexpr std::size_t kLsbsPerNonceBit = 12;
inline constexpr std::size_t kSeedWindow = 64;
inline constexpr std::size_t kParamWindowStart = 64;
inline constexpr std::size_t kParamSlots = 20;
inline constexpr std::size_t kParamSlotBits = 9;
inline constexpr std::size_t kReserveStart = kParamWindowStart + kParamSlots * kParamSlotBits;  // 244

/// 341 distilled bits: seed window [0, 64), parameter window [64, 244), reserve [244, 341).
struct NonceBuffer {
  std::bitset<kNonceBits> bits;

  bool operator==(const NonceBuffer&) const = default;
  /// Hex dump, bit i of the buffer as bit (i % 8) of byte i / 8.
  std::string to_hex() const;
};

struct IterationParams {
  unsigned rc = 0;
  unsigned tcc = 0;
  bool operator==(const IterationParams&) const = default;
};

/// nonce bit k = XOR of lsb_stream[12k .. 12k+11]; the last 4 LSBs are dropped.
NonceBuffer distill(const BitSequence& lsb_stream);

/// Nonce bits [0, 64), bit i weighted 2^i.
std::uint64_t derive_seed(const NonceBuffer& nonce);

/// Slot iteration % 20 holds 9 bits at offset 64 + 9*slot: 6 bits of RC (LSB first)
/// then 3 bits of TCC. rc = 128 + v6, tcc = 8 + 2*v3.
IterationParams derive_params(const NonceBuffer& nonce, unsigned iteration);

}  // namespace sirf
