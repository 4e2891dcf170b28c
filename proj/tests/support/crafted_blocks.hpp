// SPDX-License-Identifier: Apache-2.0
// Hand-built AIS-31 blocks shared by the unit and acceptance tests.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "sirf/bit_sequence.hpp"

namespace sirf::testing {

inline BitSequence random_bits(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitSequence s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, rng() & 1);
  return s;
}

inline BitSequence block_with_ones(std::size_t ones, std::uint64_t seed) {
  std::vector<std::uint8_t> b(20000, 0);
  std::fill(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(ones), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(b.begin(), b.end(), rng);
  return BitSequence::from_unpacked(b);
}

// Block made of 5000 nibbles with the given frequencies.
inline BitSequence poker_block(const std::array<long, 16>& f) {
  std::vector<std::uint8_t> bits;
  for (unsigned v = 0; v < 16; ++v) {
    for (long k = 0; k < f[v]; ++k) {
      for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
  }
  return BitSequence::from_unpacked(bits);
}

// X = 16/5000 * sum f^2 - 5000; both bounds compared exactly in integers.
inline bool poker_hand(const std::array<long, 16>& f) {
  long long s = 0;
  for (long c : f) s += static_cast<long long>(c) * c;
  return 1600 * s > 2500515000LL && 1600 * s < 2528700000LL;
}

// Alternating runs with the given per-bit length multiset (lengths may exceed 6).
inline BitSequence runs_block(const std::vector<std::size_t>& zero_runs, const std::vector<std::size_t>& one_runs) {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < std::max(zero_runs.size(), one_runs.size()); ++i) {
    if (i < zero_runs.size()) bits.insert(bits.end(), zero_runs[i], 0);
    if (i < one_runs.size()) bits.insert(bits.end(), one_runs[i], 1);
  }
  return BitSequence::from_unpacked(bits);
}

inline std::vector<std::size_t> run_lengths(const std::array<long, 6>& counts, std::size_t total_bits, std::uint64_t seed) {
  std::vector<std::size_t> r;
  for (int l = 0; l < 6; ++l) r.insert(r.end(), static_cast<std::size_t>(counts[l]), l + 1);
  std::size_t used = std::accumulate(r.begin(), r.end(), std::size_t{0});
  // pad the >= 6 runs up to total_bits, keeping them below 34
  for (std::size_t i = 0; used < total_bits; i = (i + 1) % r.size()) {
    if (r[i] >= 6 && r[i] < 30) {
      ++r[i];
      ++used;
    }
  }
  std::mt19937_64 rng(seed);
  std::shuffle(r.begin(), r.end(), rng);
  return r;
}

inline long naive_z(const BitSequence& b, std::size_t from, std::size_t tau) {
  long z = 0;
  for (std::size_t j = 0; j < 5000; ++j) z += b[from + j] != b[from + j + tau];
  return z;
}

}  // namespace sirf::testing
