// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "sirf/bit_sequence.hpp"
#include "sirf/entropy_model.hpp"
#include "sirf/fixed_point.hpp"
#include "sirf/nonce_distill.hpp"
#include "sirf/sequence_gen.hpp"

namespace sirf {

using DvdRaw = std::array<std::int32_t, kSetSize>;
using DvdFixed = std::array<Fixed4, kSetSize>;
using SfState = std::array<Fixed4, kSetSize>;

inline constexpr std::int32_t kSfLimitRaw = 64 * Fixed4::kScale;

/// Where the difference for selector step j is stored.
enum class DvdOrder {
  a_index,  // lane ia_j: iterations with the same pairing produce identical arrays
  step,     // lane j
};

/// Bounded max/min used for the GPEV range.
enum class GpevBounds {
  symmetric_trim,  // 0.95*max, 0.95*min
  literal,         // max - 0.05*max, min + 0.05*min
};

DvdRaw dv_diff(const std::array<DelayValue, kSetSize>& dv_a, const std::array<DelayValue, kSetSize>& dv_b,
               unsigned iteration, DvdOrder order = DvdOrder::a_index);

/// DVD_c = (DVD - mean) * rc / range, one exact integer division per element,
/// rounded half away from zero onto the F=4 lattice.
/// Throws DegenerateRange (tagged with iteration) if range < 1 count.
DvdFixed gpev_compensate(const DvdRaw& dvd, unsigned rc, unsigned iteration = 0,
                         GpevBounds bounds = GpevBounds::symmetric_trim);

/// ((raw + 1024) mod 2048) - 1024, i.e. [-64, 64) in value.
constexpr Fixed4 wrap_pm64(Fixed4 v) {
  const std::int32_t span = 2 * kSfLimitRaw;
  std::int32_t x = (v.raw() + kSfLimitRaw) % span;
  if (x < 0) x += span;
  return Fixed4::from_raw(x - kSfLimitRaw);
}

struct ChainResult {
  Fixed4 output;
  Fixed4 sf;
  std::int32_t k;
};

/// One lane of the spread-factor update. v = c - sf is reduced by k*tcc into
/// (-tcc/2, tcc/2]; for odd |k| the residue is mirrored through zero and the
/// mirror offset (-2r) is folded into sf.
ChainResult sf_chain_one(Fixed4 c, Fixed4 sf, unsigned tcc, bool half_open = false);

/// Applies sf_chain_one to every lane, updating sf in place.
/// With half_open set, a mirrored output of exactly -tcc/2 is moved to +tcc/2.
DvdFixed sf_chain(const DvdFixed& dvd_c, SfState& sf, unsigned tcc, bool half_open = false);

/// negative -> 0, positive -> 1, zero -> zero_toggle, which then flips.
void bit_gen(const DvdFixed& dvd_cs, std::uint8_t& zero_toggle, BitSequence& out);

struct SpongeOptions {
  bool chaining = true;
  bool randomize_rc = true;
  bool randomize_tcc = true;
  unsigned fixed_rc = 168;
  unsigned fixed_tcc = 18;
  bool half_open_residue = false;
  DvdOrder order = DvdOrder::a_index;
  GpevBounds bounds = GpevBounds::symmetric_trim;

  void validate() const;
};

struct SpongeState {
  unsigned iteration = 0;
  std::uint8_t zero_toggle = 0;
  SfState sf{};
};

struct SpongeCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t zero = 0;
};

struct IterationTrace {
  unsigned iteration;
  IterationParams params;
  const DvdFixed& dvd_cs;
  const SfState& sf;  // after this iteration's update
};

using TraceCallback = std::function<void(const IterationTrace&)>;

struct SpongeResult {
  BitSequence bits;  // 2^22 bits
  SpongeState state;
  SpongeCounts counts;
};

IterationParams iteration_params(const NonceBuffer& nonce, unsigned iteration, const SpongeOptions& opt);

/// 2048 iterations of DVDiff -> GPEV -> SF chain -> BitGen over one timing record.
SpongeResult sponge_run(const TimingRecord& timing, const NonceBuffer& nonce, const SpongeOptions& opt = {},
                        const TraceCallback& trace = {});

}  // namespace sirf
