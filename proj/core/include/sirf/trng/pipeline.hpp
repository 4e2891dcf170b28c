// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sirf/bit_sequence.hpp"
#include "sirf/entropy_model.hpp"
#include "sirf/nonce_distill.hpp"
#include "sirf/sponge_core.hpp"
#include "sirf/trng/config.hpp"

namespace sirf::trng {

inline constexpr std::uint64_t kBitsPerCycle = std::uint64_t{1} << 22;

/// Whole cycles needed to cover a bit budget.
constexpr std::uint64_t cycles_for(std::uint64_t bits) { return (bits + kBitsPerCycle - 1) / kBitsPerCycle; }

/// Phase 1 of one cycle: boot-strap nonce and the kept timing record.
struct PhaseOne {
  NonceBuffer nonce;
  std::uint64_t lfsr_seed = 0;
  TimingRecord timing;
  std::uint64_t clamp_events = 0;  // boot-strap and kept phase together
};

/// One simulated device with its noise source. The noise stream runs on across
/// cycles; each cycle re-runs the boot-strap from LFSR seed 1.
class Pipeline {
 public:
  explicit Pipeline(const RunConfig& cfg);

  const DeviceFingerprint& device() const { return device_; }
  const RunConfig& config() const { return cfg_; }

  /// Boot-strap timing phase (challenges from seed 1, DVs discarded) and its nonce.
  NonceBuffer bootstrap(std::uint64_t* clamp_events = nullptr);
  /// Boot-strap, reseed the challenge LFSR from the nonce, measure the kept phase.
  PhaseOne phase_one();

  struct Cycle {
    PhaseOne phase;
    SpongeResult sponge;
  };
  Cycle run_cycle(const TraceCallback& trace = {});

 private:
  RunConfig cfg_;
  DeviceFingerprint device_;
  NoiseStream noise_;
};

struct RunReport {
  std::uint64_t bits_emitted = 0;
  std::uint64_t cycles = 0;
  std::uint64_t clamp_events = 0;
  std::uint64_t zero_residues = 0;
  double seconds_phase_one = 0.0;
  double seconds_sponge = 0.0;
  double seconds_total = 0.0;
  double bits_per_second = 0.0;
};

/// Called with each cycle's 2^22 bits; return false to stop early.
using BitSink = std::function<bool(const BitSequence&)>;

/// Runs ceil(bits / 2^22) cycles. Throws DegenerateRange from the sponge.
RunReport run_trng(const RunConfig& cfg, const BitSink& sink);

/// Convenience: collect every emitted bit.
BitSequence generate_bits(const RunConfig& cfg, RunReport* report = nullptr);

/// `count` successive boot-strap nonces from one device and noise stream.
std::vector<NonceBuffer> collect_nonces(const RunConfig& cfg, std::size_t count);

}  // namespace sirf::trng
