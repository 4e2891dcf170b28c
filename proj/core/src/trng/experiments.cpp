// SPDX-License-Identifier: Apache-2.0
#include "sirf/trng/experiments.hpp"

#include <algorithm>
#include <stdexcept>

#include "sirf/trng/pipeline.hpp"

namespace sirf::trng {

namespace {

std::vector<std::vector<double>> capture_sets(const PhaseOne& p, SpongeOptions opt) {
  std::vector<std::vector<double>> sets;
  sets.reserve(kIterations);
  sponge_run(p.timing, p.nonce, opt, [&sets](const IterationTrace& t) {
    std::vector<double> v(kSetSize);
    for (std::size_t i = 0; i < kSetSize; ++i) v[i] = t.dvd_cs[i].to_double();
    sets.push_back(std::move(v));
  });
  return sets;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

PccExperiment experiment_pcc(const RunConfig& cfg, const stat::PccSampling& sampling) {
  Pipeline pipe(cfg);
  const PhaseOne p = pipe.phase_one();
  SpongeOptions opt = cfg.sponge_options();
  const auto pairs = stat::sample_pairs(kIterations, sampling);

  PccExperiment e;
  e.pairs_sampled = pairs.size();
  opt.chaining = true;
  e.chained = stat::pcc_scan(capture_sets(p, opt), pairs);
  opt.chaining = false;
  e.unchained = stat::pcc_scan(capture_sets(p, opt), pairs);
  return e;
}

double RcTccCell::median_minimum() const {
  std::vector<double> m;
  for (const auto& s : per_device) m.push_back(s.minimum());
  return median(m);
}

RcTccExperiment experiment_rc_tcc(const RunConfig& cfg, const std::vector<std::uint64_t>& device_seeds,
                                  std::uint64_t bits_per_device) {
  if (device_seeds.size() < 2) throw std::invalid_argument("experiment_rc_tcc: need at least 2 devices");
  RcTccExperiment e;
  e.device_seeds = device_seeds;
  e.bits_per_device = bits_per_device;
  for (int c = 0; c < 4; ++c) {
    e.cells[c].rc_randomized = c & 2;
    e.cells[c].tcc_randomized = c & 1;
  }
  for (const std::uint64_t seed : device_seeds) {
    RunConfig dc = cfg;
    dc.device_seed = seed;
    Pipeline pipe(dc);
    std::array<BitSequence, 4> bits;
    for (std::uint64_t cyc = 0; cyc < cycles_for(bits_per_device); ++cyc) {
      const PhaseOne p = pipe.phase_one();
      for (int c = 0; c < 4; ++c) {
        SpongeOptions opt = dc.sponge_options();
        opt.randomize_rc = e.cells[c].rc_randomized;
        opt.randomize_tcc = e.cells[c].tcc_randomized;
        bits[c].append(sponge_run(p.timing, p.nonce, opt).bits);
      }
    }
    for (int c = 0; c < 4; ++c) {
      e.cells[c].per_device.push_back(stat::estimate_all(bits[c].slice(0, bits_per_device)));
    }
  }
  return e;
}

std::vector<EnvPoint> experiment_env_attack(const RunConfig& cfg, const std::vector<EnvCondition>& sweep) {
  RunConfig base = cfg;
  base.env = EnvCondition{};
  const BitSequence ref = generate_bits(base);
  const NonceBuffer ref_nonce = Pipeline(base).bootstrap();
  std::vector<EnvPoint> out;
  for (const EnvCondition& env : sweep) {
    RunConfig c = cfg;
    c.env = env;
    EnvPoint pt;
    pt.env = env;
    pt.divergence = hamming_fraction(ref, generate_bits(c));
    pt.nonce_matches_baseline = Pipeline(c).bootstrap() == ref_nonce;
    out.push_back(pt);
  }
  return out;
}

}  // namespace sirf::trng
