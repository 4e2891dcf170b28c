// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sirf/bit_sequence.hpp"
#include "sirf/sequence_gen.hpp"

namespace sirf {

struct Geometry {
  unsigned rows = 3;
  unsigned cols = 2;
  unsigned segments_per_stage = 80;

  unsigned stages() const { return rows * cols; }
  /// Width of the challenge bit field that addresses one stage.
  unsigned field_bits() const;
  bool operator==(const Geometry&) const = default;
};

/// Simulated process variation: per-edge, per-stage, per-segment nominal delays.
///
/// A path uses one segment in every stage. Stage s reads its segment index from
/// challenge bits [1 + w*s, 1 + w*(s+1)) modulo the segment count, where w is
/// Geometry::field_bits(); the last stage additionally adds the path index.
/// Bit 0 of the challenge picks the rising (0) or falling (1) edge table.
class DeviceFingerprint {
 public:
  static constexpr double kStageMeanPs = 300.0;
  static constexpr double kStageSigmaPs = 30.0;
  static constexpr double kFallingEdgeFactor = 1.15;
  static constexpr double kCalibLow = 310.0;
  static constexpr double kCalibHigh = 990.0;

  DeviceFingerprint(std::uint64_t device_seed, Geometry geometry);

  std::uint64_t device_seed() const { return seed_; }
  const Geometry& geometry() const { return geom_; }

  double segment_delay_ps(unsigned edge, unsigned stage, unsigned segment) const {
    return table_[(edge * geom_.stages() + stage) * geom_.segments_per_stage + segment];
  }
  const std::vector<double>& segment_delays() const { return table_; }

  /// Picoseconds to TDC counts: counts = scale * ps + offset.
  double calib_scale() const { return calib_scale_; }
  double calib_offset() const { return calib_offset_; }

  unsigned segment_index(std::uint64_t challenge_word, unsigned stage, unsigned path_idx) const;
  /// Calibrated nominal delay in TDC counts, before environment and noise.
  double nominal(const Challenge& c, unsigned path_idx) const;

  /// Seed and geometry only; the table is regenerated on load.
  std::string to_json() const;
  static DeviceFingerprint from_json(const std::string& text);

 private:
  std::uint64_t seed_;
  Geometry geom_;
  std::vector<double> table_;
  double calib_scale_ = 1.0;
  double calib_offset_ = 0.0;
};

inline DeviceFingerprint build_device(std::uint64_t device_seed, Geometry geometry = {}) {
  return DeviceFingerprint(device_seed, geometry);
}

struct EnvCondition {
  double temp_offset = 0.0;
  double supply_scale = 1.0;
  void validate() const;
};

/// Seeded Gaussian measurement noise. Box-Muller is written out rather than using
/// std::normal_distribution so that realizations match across standard libraries.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t noise_seed, double sigma);

  double sigma() const { return sigma_; }
  /// One zero-mean draw with the configured sigma.
  double draw();

 private:
  double standard_normal();

  std::mt19937_64 rng_;
  double sigma_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

using DelayValue = std::uint16_t;
inline constexpr DelayValue kDvMax = 4095;

/// dv = clamp12(round(nominal * supply_scale + temp_offset + noise)).
/// Consumes exactly one noise draw; increments *clamp_events when clamping.
DelayValue measure_path(const DeviceFingerprint& device, const Challenge& challenge, unsigned path_idx,
                        const EnvCondition& env, NoiseStream& noise, std::uint64_t* clamp_events = nullptr);

struct TimingRecord {
  std::array<DelayValue, kSetSize> dv_a{};
  std::array<DelayValue, kSetSize> dv_b{};
  BitSequence lsb_stream;  // 4096 bits, measurement order
  std::uint64_t clamp_events = 0;

  bool operator==(const TimingRecord&) const = default;
};

/// Measures 32 paths for each of 128 challenges; measurements 0-2047 fill dv_a,
/// 2048-4095 fill dv_b.
TimingRecord timing_phase(const DeviceFingerprint& device, const std::vector<Challenge>& challenges,
                          const EnvCondition& env, NoiseStream& noise);

}  // namespace sirf
