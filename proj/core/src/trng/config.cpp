// SPDX-License-Identifier: Apache-2.0
#include "sirf/trng/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sirf/errors.hpp"

namespace sirf::trng {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  int base = 10;
  std::string_view sv = v;
  if (sv.size() > 2 && sv[0] == '0' && (sv[1] == 'x' || sv[1] == 'X')) {
    base = 16;
    sv.remove_prefix(2);
  }
  const auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out, base);
  if (ec != std::errc{} || p != sv.data() + sv.size()) throw ConfigError(key + ": not an unsigned integer: " + v);
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(d)) throw ConfigError(key + ": not a number: " + v);
    return d;
  } catch (const std::logic_error&) {
    throw ConfigError(key + ": not a number: " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError(key + ": not a boolean: " + v);
}

}  // namespace

void RunConfig::validate() const {
  if (!(sigma >= 0.0)) throw ConfigError("sigma must be >= 0");
  if (!(env.supply_scale > 0.0)) throw ConfigError("supply_scale must be > 0");
  if (!rc_randomized && (fixed_rc < 128 || fixed_rc > 191)) throw ConfigError("rc must be in [128, 191]");
  if (!tcc_randomized && (fixed_tcc < 8 || fixed_tcc > 22 || fixed_tcc % 2)) {
    throw ConfigError("tcc must be even in [8, 22]");
  }
  if (bits == 0) throw ConfigError("bits must be > 0");
  if (perms < 100) throw ConfigError("perms must be >= 100");
  if (pcc_pairs == 0) throw ConfigError("pcc_pairs must be > 0");
}

SpongeOptions RunConfig::sponge_options() const {
  SpongeOptions o;
  o.chaining = chaining;
  o.randomize_rc = rc_randomized;
  o.randomize_tcc = tcc_randomized;
  o.fixed_rc = fixed_rc;
  o.fixed_tcc = fixed_tcc;
  return o;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "device_seed") {
    cfg.device_seed = parse_u64(key, v);
  } else if (key == "noise_seed") {
    cfg.noise_seed = parse_u64(key, v);
  } else if (key == "sigma") {
    cfg.sigma = parse_double(key, v);
  } else if (key == "temp_offset") {
    cfg.env.temp_offset = parse_double(key, v);
  } else if (key == "supply_scale") {
    cfg.env.supply_scale = parse_double(key, v);
  } else if (key == "chaining") {
    cfg.chaining = parse_bool(key, v);
  } else if (key == "rc") {
    cfg.rc_randomized = v == "rand";
    if (!cfg.rc_randomized) cfg.fixed_rc = static_cast<unsigned>(parse_u64(key, v));
  } else if (key == "tcc") {
    cfg.tcc_randomized = v == "rand";
    if (!cfg.tcc_randomized) cfg.fixed_tcc = static_cast<unsigned>(parse_u64(key, v));
  } else if (key == "rows") {
    cfg.geometry.rows = static_cast<unsigned>(parse_u64(key, v));
  } else if (key == "cols") {
    cfg.geometry.cols = static_cast<unsigned>(parse_u64(key, v));
  } else if (key == "segments_per_stage") {
    cfg.geometry.segments_per_stage = static_cast<unsigned>(parse_u64(key, v));
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "bits") {
    cfg.bits = parse_u64(key, v);
  } else if (key == "perms") {
    cfg.perms = parse_u64(key, v);
  } else if (key == "pcc_pairs") {
    cfg.pcc_pairs = parse_u64(key, v);
  } else if (key == "pcc_seed") {
    cfg.pcc_seed = parse_u64(key, v);
  } else if (key == "report") {
    cfg.report = v;
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream o;
  o.precision(17);
  o << "device_seed = " << c.device_seed << '\n'
    << "noise_seed = " << c.noise_seed << '\n'
    << "sigma = " << c.sigma << '\n'
    << "temp_offset = " << c.env.temp_offset << '\n'
    << "supply_scale = " << c.env.supply_scale << '\n'
    << "rows = " << c.geometry.rows << '\n'
    << "cols = " << c.geometry.cols << '\n'
    << "segments_per_stage = " << c.geometry.segments_per_stage << '\n'
    << "chaining = " << (c.chaining ? "true" : "false") << '\n'
    << "rc = " << (c.rc_randomized ? std::string("rand") : std::to_string(c.fixed_rc)) << '\n'
    << "tcc = " << (c.tcc_randomized ? std::string("rand") : std::to_string(c.fixed_tcc)) << '\n'
    << "bits = " << c.bits << '\n'
    << "perms = " << c.perms << '\n'
    << "pcc_pairs = " << c.pcc_pairs << '\n'
    << "pcc_seed = " << c.pcc_seed << '\n';
  return o.str();
}

}  // namespace sirf::trng
