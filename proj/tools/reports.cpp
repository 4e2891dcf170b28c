// SPDX-License-Identifier: Apache-2.0
#include "reports.hpp"

#include <fstream>
#include <sstream>

#include "sirf/errors.hpp"

namespace sirf::cli {

json to_json(const trng::RunConfig& c) {
  return {
      {"device_seed", c.device_seed},
      {"noise_seed", c.noise_seed},
      {"sigma", c.sigma},
      {"temp_offset", c.env.temp_offset},
      {"supply_scale", c.env.supply_scale},
      {"geometry", {{"rows", c.geometry.rows}, {"cols", c.geometry.cols},
                    {"segments_per_stage", c.geometry.segments_per_stage}}},
      {"chaining", c.chaining},
      {"rc", c.rc_randomized ? json("rand") : json(c.fixed_rc)},
      {"tcc", c.tcc_randomized ? json("rand") : json(c.fixed_tcc)},
      {"bits", c.bits},
      {"perms", c.perms},
      {"pcc_pairs", c.pcc_pairs},
      {"pcc_seed", c.pcc_seed},
  };
}

json to_json(const trng::RunReport& r) {
  return {
      {"bits_emitted", r.bits_emitted},
      {"cycles", r.cycles},
      {"health", {{"clamp_events", r.clamp_events}, {"zero_residues", r.zero_residues}}},
      {"seconds", {{"phase_one", r.seconds_phase_one}, {"sponge", r.seconds_sponge}, {"total", r.seconds_total}}},
      {"bits_per_second", r.bits_per_second},
  };
}

json to_json(const stat::TestVerdict& v) {
  json values = json::object();
  for (const auto& [k, x] : v.values) values[k] = x;
  return {{"name", v.name}, {"pass", v.pass}, {"insufficient_data", v.insufficient_data},
          {"threshold", v.threshold}, {"values", values}};
}

json to_json(const stat::Ais31Result& r) {
  json tests = json::array();
  for (const auto& v : r.verdicts) tests.push_back(to_json(v));
  return {{"all_pass", r.all_pass()}, {"bits_consumed", r.bits_consumed}, {"tests", tests}};
}

json to_json(const stat::EstimatorSuite& e) {
  return {{"mcv", e.mcv}, {"collision", e.collision}, {"markov", e.markov},
          {"compression", e.compression}, {"minimum", e.minimum()}};
}

json to_json(const stat::IidReport& r) {
  json tests = json::array();
  for (const auto& t : r.tests) {
    json sub = json::array();
    for (const auto& c : t.sub) {
      sub.push_back({{"name", c.name}, {"t", c.t}, {"c0", c.c0}, {"c1", c.c1}, {"pass", c.pass}});
    }
    tests.push_back({{"name", t.name}, {"pass", t.pass}, {"statistics", sub}});
  }
  return {{"permutations", r.permutations}, {"all_pass", r.all_pass()},
          {"degenerate_input", r.degenerate_input}, {"tests", tests}};
}

json to_json(const stat::PccReport& r) {
  json high = json::array();
  for (const auto& e : r.high) high.push_back({{"i", e.i}, {"j", e.j}, {"r", e.r}});
  return {
      {"pairs_examined", r.pairs_examined},
      {"pairs_skipped", r.pairs_skipped},
      {"degenerate_sets", r.degenerate_sets},
      {"max_abs_r", r.max_abs_r},
      {"max_pair", {{"i", r.max_pair.i}, {"j", r.max_pair.j}, {"r", r.max_pair.r}}},
      {"pairs_at_least_0_99", r.count_at_least(0.99)},
      {"high", high},
  };
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

std::string pcc_histogram_csv(const stat::PccReport& r) {
  std::ostringstream o;
  o << "bin_left,bin_right,count\n";
  const std::size_t n = r.histogram.size();
  for (std::size_t b = 0; b < n; ++b) {
    o << -1.0 + 2.0 * static_cast<double>(b) / n << ',' << -1.0 + 2.0 * static_cast<double>(b + 1) / n << ','
      << r.histogram[b] << '\n';
  }
  return o.str();
}

std::string rc_tcc_csv(const trng::RcTccExperiment& e) {
  std::ostringstream o;
  o.precision(10);
  o << "rc_randomized,tcc_randomized,device_seed,mcv,collision,markov,compression,minimum\n";
  for (const auto& c : e.cells) {
    for (std::size_t d = 0; d < c.per_device.size(); ++d) {
      const auto& s = c.per_device[d];
      o << c.rc_randomized << ',' << c.tcc_randomized << ',' << e.device_seeds[d] << ',' << s.mcv << ','
        << s.collision << ',' << s.markov << ',' << s.compression << ',' << s.minimum() << '\n';
    }
  }
  return o.str();
}

std::string env_csv(const std::vector<trng::EnvPoint>& pts) {
  std::ostringstream o;
  o.precision(10);
  o << "temp_offset,supply_scale,divergence,nonce_matches_baseline\n";
  for (const auto& p : pts) {
    o << p.env.temp_offset << ',' << p.env.supply_scale << ',' << p.divergence << ','
      << p.nonce_matches_baseline << '\n';
  }
  return o.str();
}

}  // namespace sirf::cli
