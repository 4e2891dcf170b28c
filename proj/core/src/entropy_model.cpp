// SPDX-License-Identifier: Apache-2.0
#include "sirf/entropy_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <nlohmann/json.hpp>

#include "sirf/errors.hpp"

namespace sirf {

unsigned Geometry::field_bits() const {
  return segments_per_stage <= 1 ? 1U : static_cast<unsigned>(std::bit_width(segments_per_stage - 1));
}

DeviceFingerprint::DeviceFingerprint(std::uint64_t device_seed, Geometry geometry)
    : seed_(device_seed), geom_(geometry) {
  if (geom_.rows == 0 || geom_.cols == 0 || geom_.segments_per_stage == 0) {
    throw InvalidGeometry("geometry counts must be >= 1");
  }
  if (1 + geom_.stages() * geom_.field_bits() > 64) {
    throw InvalidGeometry("challenge word too narrow for " + std::to_string(geom_.stages()) + " stages");
  }

  const unsigned stages = geom_.stages();
  const unsigned segs = geom_.segments_per_stage;
  table_.resize(2ULL * stages * segs);

  NoiseStream gauss(seed_, kStageSigmaPs);
  for (unsigned e = 0; e < 2; ++e) {
    const double mean = kStageMeanPs * (e == 0 ? 1.0 : kFallingEdgeFactor);
    for (unsigned s = 0; s < stages; ++s) {
      for (unsigned k = 0; k < segs; ++k) {
        table_[(e * stages + s) * segs + k] = mean + gauss.draw();
      }
    }
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (unsigned e = 0; e < 2; ++e) {
    double smin = 0.0;
    double smax = 0.0;
    for (unsigned s = 0; s < stages; ++s) {
      const auto first = table_.begin() + (e * stages + s) * segs;
      const auto [mn, mx] = std::minmax_element(first, first + segs);
      smin += *mn;
      smax += *mx;
    }
    lo = std::min(lo, smin);
    hi = std::max(hi, smax);
  }
  if (hi > lo) {
    calib_scale_ = (kCalibHigh - kCalibLow) / (hi - lo);
    calib_offset_ = kCalibLow - calib_scale_ * lo;
  } else {
    calib_scale_ = 0.0;
    calib_offset_ = 0.5 * (kCalibLow + kCalibHigh);
  }
}

unsigned DeviceFingerprint::segment_index(std::uint64_t word, unsigned stage, unsigned path_idx) const {
  const unsigned w = geom_.field_bits();
  const std::uint64_t field = (word >> (1 + w * stage)) & ((1ULL << w) - 1);
  std::uint64_t idx = field;
  if (stage + 1 == geom_.stages()) idx += path_idx;
  return static_cast<unsigned>(idx % geom_.segments_per_stage);
}

double DeviceFingerprint::nominal(const Challenge& c, unsigned path_idx) const {
  const unsigned e = c.edge();
  double ps = 0.0;
  for (unsigned s = 0; s < geom_.stages(); ++s) {
    ps += segment_delay_ps(e, s, segment_index(c.word, s, path_idx));
  }
  return calib_scale_ * ps + calib_offset_;
}

std::string DeviceFingerprint::to_json() const {
  nlohmann::json j;
  j["device_seed"] = seed_;
  j["rows"] = geom_.rows;
  j["cols"] = geom_.cols;
  j["segments_per_stage"] = geom_.segments_per_stage;
  return j.dump();
}

DeviceFingerprint DeviceFingerprint::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Geometry g;
    g.rows = j.value("rows", g.rows);
    g.cols = j.value("cols", g.cols);
    g.segments_per_stage = j.value("segments_per_stage", g.segments_per_stage);
    return DeviceFingerprint(j.at("device_seed").get<std::uint64_t>(), g);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("device json: ") + e.what());
  }
}

void EnvCondition::validate() const {
  if (!(supply_scale > 0.0) || !std::isfinite(supply_scale) || !std::isfinite(temp_offset)) {
    throw std::invalid_argument("EnvCondition: supply_scale must be > 0 and values finite");
  }
}

NoiseStream::NoiseStream(std::uint64_t noise_seed, double sigma) : rng_(noise_seed), sigma_(sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("NoiseStream: sigma must be >= 0");
}

double NoiseStream::standard_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  constexpr double kInv = 1.0 / 18446744073709551616.0;  // 2^-64
  // u1 in (0, 1], u2 in [0, 1)
  const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * (kInv * 2048.0);
  const double u2 = static_cast<double>(rng_() >> 11) * (kInv * 2048.0);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = rad * std::sin(ang);
  have_spare_ = true;
  return rad * std::cos(ang);
}

double NoiseStream::draw() {
  const double z = standard_normal();
  return sigma_ * z;
}

DelayValue measure_path(const DeviceFingerprint& device, const Challenge& challenge, unsigned path_idx,
                        const EnvCondition& env, NoiseStream& noise, std::uint64_t* clamp_events) {
  if (path_idx >= kPathsPerChallenge) throw std::invalid_argument("measure_path: path_idx >= 32");
  const double x = device.nominal(challenge, path_idx) * env.supply_scale + env.temp_offset + noise.draw();
  const long v = std::lround(x);
  if (v < 0 || v > kDvMax) {
    if (clamp_events) ++*clamp_events;
    return v < 0 ? 0 : kDvMax;
  }
  return static_cast<DelayValue>(v);
}

TimingRecord timing_phase(const DeviceFingerprint& device, const std::vector<Challenge>& challenges,
                          const EnvCondition& env, NoiseStream& noise) {
  if (challenges.size() != kChallengesPerPhase) {
    throw std::invalid_argument("timing_phase: expected 128 challenges");
  }
  env.validate();
  TimingRecord rec;
  rec.lsb_stream = BitSequence(2 * kSetSize);
  std::size_t m = 0;
  for (const auto& c : challenges) {
    for (unsigned p = 0; p < kPathsPerChallenge; ++p, ++m) {
      const DelayValue dv = measure_path(device, c, p, env, noise, &rec.clamp_events);
      if (m < kSetSize) {
        rec.dv_a[m] = dv;
      } else {
        rec.dv_b[m - kSetSize] = dv;
      }
      rec.lsb_stream.set(m, dv & 1U);
    }
  }
  return rec;
}

}  // namespace sirf
