// SPDX-License-Identifier: Apache-2.0
#include "sirf/sponge_core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sirf/errors.hpp"

namespace sirf {

namespace {

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool tcc_valid(unsigned tcc) { return tcc >= 8 && tcc <= 22 && tcc % 2 == 0; }

}  // namespace

DvdRaw dv_diff(const std::array<DelayValue, kSetSize>& dv_a, const std::array<DelayValue, kSetSize>& dv_b,
               unsigned iteration, DvdOrder order) {
  const auto [sa, sb] = pair_seeds(iteration);
  const IndexPairs p = select_indices(sa, sb);
  DvdRaw out{};
  for (std::size_t j = 0; j < kSetSize; ++j) {
    const std::int32_t d = static_cast<std::int32_t>(dv_a[p.ia[j]]) - static_cast<std::int32_t>(dv_b[p.ib[j]]);
    out[order == DvdOrder::a_index ? p.ia[j] : j] = d;
  }
  return out;
}

DvdFixed gpev_compensate(const DvdRaw& dvd, unsigned rc, unsigned iteration, GpevBounds bounds) {
  if (rc < 128 || rc > 191) throw std::invalid_argument("gpev_compensate: rc outside [128, 191]");
  const std::int64_t n = static_cast<std::int64_t>(dvd.size());
  const std::int64_t sum = std::accumulate(dvd.begin(), dvd.end(), std::int64_t{0});
  const auto [mn_it, mx_it] = std::minmax_element(dvd.begin(), dvd.end());
  const std::int64_t mn = *mn_it;
  const std::int64_t mx = *mx_it;

  // range * 20, kept integral
  const std::int64_t range20 = bounds == GpevBounds::symmetric_trim ? 19 * (mx - mn) : 19 * mx - 21 * mn;
  if (range20 < 20) throw DegenerateRange(iteration);

  // raw = (d - sum/n) * rc * 16 / (range20 / 20)
  const std::int64_t scale = static_cast<std::int64_t>(rc) * Fixed4::kScale * 20;
  const std::int64_t den = n * range20;
  DvdFixed out;
  for (std::size_t i = 0; i < dvd.size(); ++i) {
    const std::int64_t num = (n * dvd[i] - sum) * scale;
    out[i] = Fixed4::from_raw(static_cast<std::int32_t>(div_round_half_away(num, den)));
  }
  return out;
}

ChainResult sf_chain_one(Fixed4 c, Fixed4 sf, unsigned tcc, bool half_open) {
  const std::int64_t t = static_cast<std::int64_t>(tcc) * Fixed4::kScale;
  const std::int64_t half = t / 2;
  const std::int64_t v = static_cast<std::int64_t>(c.raw()) - sf.raw();
  // smallest k with v - k*t <= half, i.e. ceil((v - half) / t)
  const std::int64_t k = -floor_div(-(v - half), t);
  const std::int64_t r = v - k * t;
  if ((k & 1) == 0) {
    return {Fixed4::from_raw(static_cast<std::int32_t>(r)), sf, static_cast<std::int32_t>(k)};
  }
  std::int64_t outv = -r;
  if (half_open && outv == -half) outv = half;
  const Fixed4 out = Fixed4::from_raw(static_cast<std::int32_t>(outv));
  const Fixed4 offset = Fixed4::from_raw(static_cast<std::int32_t>(outv - r));
  return {out, wrap_pm64(sf + offset), static_cast<std::int32_t>(k)};
}

DvdFixed sf_chain(const DvdFixed& dvd_c, SfState& sf, unsigned tcc, bool half_open) {
  if (!tcc_valid(tcc)) throw std::invalid_argument("sf_chain: tcc must be even in [8, 22]");
  DvdFixed out;
  for (std::size_t x = 0; x < dvd_c.size(); ++x) {
    const ChainResult cr = sf_chain_one(dvd_c[x], sf[x], tcc, half_open);
    out[x] = cr.output;
    sf[x] = cr.sf;
  }
  return out;
}

void bit_gen(const DvdFixed& dvd_cs, std::uint8_t& zero_toggle, BitSequence& out) {
  for (const Fixed4 v : dvd_cs) {
    if (v.raw() < 0) {
      out.push_back(false);
    } else if (v.raw() > 0) {
      out.push_back(true);
    } else {
      out.push_back(zero_toggle != 0);
      zero_toggle ^= 1U;
    }
  }
}

void SpongeOptions::validate() const {
  if (!randomize_rc && (fixed_rc < 128 || fixed_rc > 191)) {
    throw std::invalid_argument("fixed_rc must be in [128, 191]");
  }
  if (!randomize_tcc && !tcc_valid(fixed_tcc)) {
    throw std::invalid_argument("fixed_tcc must be even in [8, 22]");
  }
}

IterationParams iteration_params(const NonceBuffer& nonce, unsigned iteration, const SpongeOptions& opt) {
  IterationParams p = derive_params(nonce, iteration);
  if (!opt.randomize_rc) p.rc = opt.fixed_rc;
  if (!opt.randomize_tcc) p.tcc = opt.fixed_tcc;
  return p;
}

SpongeResult sponge_run(const TimingRecord& timing, const NonceBuffer& nonce, const SpongeOptions& opt,
                        const TraceCallback& trace) {
  opt.validate();
  SpongeResult res;
  res.bits.reserve(kIterations * kSetSize);
  SpongeState& st = res.state;
  for (unsigned it = 0; it < kIterations; ++it) {
    st.iteration = it;
    const IterationParams p = iteration_params(nonce, it, opt);
    const DvdRaw dvd = dv_diff(timing.dv_a, timing.dv_b, it, opt.order);
    const DvdFixed c = gpev_compensate(dvd, p.rc, it, opt.bounds);
    const DvdFixed cs = opt.chaining ? sf_chain(c, st.sf, p.tcc, opt.half_open_residue) : c;
    for (const Fixed4 v : cs) {
      if (v.raw() > 0) {
        ++res.counts.positive;
      } else if (v.raw() < 0) {
        ++res.counts.negative;
      } else {
        ++res.counts.zero;
      }
    }
    bit_gen(cs, st.zero_toggle, res.bits);
    if (trace) trace(IterationTrace{it, p, cs, st.sf});
  }
  return res;
}

}  // namespace sirf
