// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "sirf/bit_sequence.hpp"

namespace sirf::stat {

/// Upper tail of the chi-square distribution.
double chi2_sf(double x, double df);

/// Frequency (monobit) p-value: erfc(|S| / sqrt(2n)).
double frequency_pvalue(const BitSequence& bits);
/// Poker p-value on disjoint 4-bit words, 15 degrees of freedom.
double poker_pvalue(const BitSequence& bits);

/// Pools residues on the F=4 lattice, normalized by their TCC, into 64 bins
/// (-1/2 + b/64, -1/2 + (b+1)/64] (bin 0 also holds -1/2).
///
/// Expected counts are computed from the lattice itself: for modulus T the
/// possible raw values are -8T..8T and a uniform residue puts weight 1/(16T) on
/// each interior point and 1/(32T) on each end point.
class LatticeUniformity {
 public:
  static constexpr std::size_t kBins = 64;

  void add(std::span<const std::int32_t> raw, unsigned tcc);

  struct Result {
    double chi2 = 0.0;
    double df = kBins - 1;
    double p_value = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t outside = 0;  // values beyond [-T/2, T/2]
  };
  Result result() const;

  const std::array<std::uint64_t, kBins>& observed() const { return observed_; }
  const std::array<double, kBins>& expected() const { return expected_; }

  static std::size_t bin_of(std::int32_t raw, unsigned tcc);

 private:
  std::array<std::uint64_t, kBins> observed_{};
  std::array<double, kBins> expected_{};
  std::uint64_t samples_ = 0;
  std::uint64_t outside_ = 0;
};

/// Fixed-width histogram of values in [lo, hi); out-of-range values are clamped
/// into the end bins.
template <std::size_t N>
struct Histogram {
  double lo;
  double hi;
  std::array<std::uint64_t, N> counts{};

  void add(double v) {
    double f = (v - lo) / (hi - lo) * static_cast<double>(N);
    if (f < 0) f = 0;
    auto b = static_cast<std::size_t>(f);
    if (b >= N) b = N - 1;
    ++counts[b];
  }
  double left(std::size_t b) const { return lo + (hi - lo) * static_cast<double>(b) / N; }
  double right(std::size_t b) const { return left(b + 1); }
};

}  // namespace sirf::stat
