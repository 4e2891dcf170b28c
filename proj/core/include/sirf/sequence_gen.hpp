// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace sirf {

/// 64-bit Fibonacci LFSR, taps {64, 63, 61, 60}, shifting left.
/// The feedback bit is the parity of state bits 63, 62, 60, 59 and enters at bit 0.
class Lfsr64 {
 public:
  static constexpr std::uint64_t kTapMask =
      (1ULL << 63) | (1ULL << 62) | (1ULL << 60) | (1ULL << 59);

  /// Seed 0 is mapped to 1; the all-zero state is a fixed point.
  explicit Lfsr64(std::uint64_t seed = 1) : state_(seed == 0 ? 1 : seed) {}

  std::uint64_t state() const { return state_; }

  /// Advance one step, returning the new feedback bit.
  unsigned step() {
    const unsigned fb = static_cast<unsigned>(__builtin_parityll(state_ & kTapMask));
    state_ = (state_ << 1) | fb;
    return fb;
  }

  /// Advance 64 steps, so the returned word consists entirely of fresh feedback bits.
  std::uint64_t next_word() {
    for (int i = 0; i < 64; ++i) step();
    return state_;
  }

 private:
  std::uint64_t state_;
};

inline Lfsr64 lfsr64_seed(std::uint64_t seed) { return Lfsr64(seed); }

struct Challenge {
  std::uint64_t word = 0;
  unsigned edge() const { return static_cast<unsigned>(word & 1U); }
  bool operator==(const Challenge&) const = default;
};

inline constexpr std::size_t kChallengesPerPhase = 128;
inline constexpr std::size_t kPathsPerChallenge = 32;
inline constexpr std::size_t kSetSize = 2048;
inline constexpr std::size_t kIterations = 2048;

/// 128 successive challenge words; advances st.
std::vector<Challenge> challenge_schedule(Lfsr64& st);

/// 11-bit selector: x^11 + x^2 + 1 with the de Bruijn extension, which splices
/// state 0 in between 0x400 and 0x001 so the cycle covers all 2048 states.
class Selector11 {
 public:
  explicit Selector11(std::uint16_t seed) : state_(static_cast<std::uint16_t>(seed & 0x7FF)) {}

  std::uint16_t state() const { return state_; }

  static std::uint16_t next(std::uint16_t s) {
    unsigned fb = ((s >> 10) ^ (s >> 8)) & 1U;
    if ((s & 0x3FF) == 0) fb ^= 1U;
    return static_cast<std::uint16_t>(((s << 1) & 0x7FF) | fb);
  }

  std::uint16_t step() {
    state_ = next(state_);
    return state_;
  }

 private:
  std::uint16_t state_;
};

/// (iteration, 2047 - iteration). Throws std::invalid_argument when iteration > 2047.
std::pair<std::uint16_t, std::uint16_t> pair_seeds(unsigned iteration);

struct IndexPairs {
  std::array<std::uint16_t, kSetSize> ia;
  std::array<std::uint16_t, kSetSize> ib;
};

/// Both selectors start at their seed state and are stepped in lockstep;
/// element j is the pair of states before step j (so ia[0] == seed_a).
IndexPairs select_indices(std::uint16_t seed_a, std::uint16_t seed_b);

}  // namespace sirf
