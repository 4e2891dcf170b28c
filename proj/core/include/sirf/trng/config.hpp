// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "sirf/entropy_model.hpp"
#include "sirf/sponge_core.hpp"

namespace sirf::trng {

struct RunConfig {
  std::uint64_t device_seed = 1;
  std::uint64_t noise_seed = 1;
  double sigma = 1.0;
  EnvCondition env;
  Geometry geometry;
  bool chaining = true;
  bool rc_randomized = true;
  bool tcc_randomized = true;
  unsigned fixed_rc = 168;
  unsigned fixed_tcc = 18;
  std::string out = "-";
  std::uint64_t bits = std::uint64_t{1} << 22;
  std::uint64_t perms = 1000;
  std::uint64_t pcc_pairs = 100000;
  std::uint64_t pcc_seed = 1;
  std::string report;

  /// Throws ConfigError.
  void validate() const;
  SpongeOptions sponge_options() const;
};

/// Applies one key = value setting. Keys use underscores and mirror the field
/// names; rc / tcc accept "rand" or a number. Throws ConfigError.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat text: one key = value per line, '#' starts a comment.
void load_config_file(RunConfig& cfg, const std::string& path);

/// The same format load_config_file reads, for reports and reproduction.
std::string to_config_text(const RunConfig& cfg);

}  // namespace sirf::trng
