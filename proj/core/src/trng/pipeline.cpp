// SPDX-License-Identifier: Apache-2.0
#include "sirf/trng/pipeline.hpp"

#include <chrono>

namespace sirf::trng {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Pipeline::Pipeline(const RunConfig& cfg)
    : cfg_(cfg), device_(cfg.device_seed, cfg.geometry), noise_(cfg.noise_seed, cfg.sigma) {
  cfg_.validate();
}

NonceBuffer Pipeline::bootstrap(std::uint64_t* clamp_events) {
  Lfsr64 lfsr(1);
  const auto challenges = challenge_schedule(lfsr);
  const TimingRecord boot = timing_phase(device_, challenges, cfg_.env, noise_);
  if (clamp_events) *clamp_events += boot.clamp_events;
  return distill(boot.lsb_stream);
}

PhaseOne Pipeline::phase_one() {
  PhaseOne p;
  p.nonce = bootstrap(&p.clamp_events);
  p.lfsr_seed = derive_seed(p.nonce);
  Lfsr64 lfsr = lfsr64_seed(p.lfsr_seed);
  p.timing = timing_phase(device_, challenge_schedule(lfsr), cfg_.env, noise_);
  p.clamp_events += p.timing.clamp_events;
  return p;
}

Pipeline::Cycle Pipeline::run_cycle(const TraceCallback& trace) {
  Cycle c;
  c.phase = phase_one();
  c.sponge = sponge_run(c.phase.timing, c.phase.nonce, cfg_.sponge_options(), trace);
  return c;
}

RunReport run_trng(const RunConfig& cfg, const BitSink& sink) {
  const auto t0 = Clock::now();
  Pipeline pipe(cfg);
  RunReport rep;
  const std::uint64_t cycles = cycles_for(cfg.bits);
  for (std::uint64_t i = 0; i < cycles; ++i) {
    auto t = Clock::now();
    PhaseOne p = pipe.phase_one();
    rep.seconds_phase_one += seconds_since(t);
    t = Clock::now();
    SpongeResult s = sponge_run(p.timing, p.nonce, cfg.sponge_options());
    rep.seconds_sponge += seconds_since(t);
    rep.clamp_events += p.clamp_events;
    rep.zero_residues += s.counts.zero;
    ++rep.cycles;
    rep.bits_emitted += s.bits.size();
    if (sink && !sink(s.bits)) break;
  }
  rep.seconds_total = seconds_since(t0);
  rep.bits_per_second = rep.seconds_total > 0 ? static_cast<double>(rep.bits_emitted) / rep.seconds_total : 0.0;
  return rep;
}

BitSequence generate_bits(const RunConfig& cfg, RunReport* report) {
  BitSequence all;
  all.reserve(cycles_for(cfg.bits) * kBitsPerCycle);
  const RunReport r = run_trng(cfg, [&all](const BitSequence& b) {
    all.append(b);
    return true;
  });
  if (report) *report = r;
  return all;
}

std::vector<NonceBuffer> collect_nonces(const RunConfig& cfg, std::size_t count) {
  Pipeline pipe(cfg);
  std::vector<NonceBuffer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pipe.bootstrap());
  return out;
}

}  // namespace sirf::trng
