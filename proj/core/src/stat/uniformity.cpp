// SPDX-License-Identifier: Apache-2.0
#include "sirf/stat/uniformity.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sirf::stat {

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, x / 2.0);
}

double frequency_pvalue(const BitSequence& bits) {
  if (bits.empty()) throw std::invalid_argument("frequency_pvalue: empty input");
  const double n = static_cast<double>(bits.size());
  const double s = 2.0 * static_cast<double>(bits.count_ones()) - n;
  return std::erfc(std::fabs(s) / std::sqrt(2.0 * n));
}

double poker_pvalue(const BitSequence& bits) {
  const std::size_t k = bits.size() / 4;
  if (k < 16) throw std::invalid_argument("poker_pvalue: need at least 64 bits");
  std::array<double, 16> f{};
  for (std::size_t i = 0; i < k; ++i) {
    unsigned v = 0;
    for (std::size_t j = 0; j < 4; ++j) v = (v << 1) | static_cast<unsigned>(bits[4 * i + j]);
    f[v] += 1.0;
  }
  double s = 0.0;
  for (double c : f) s += c * c;
  const double kd = static_cast<double>(k);
  return chi2_sf(16.0 / kd * s - kd, 15.0);
}

std::size_t LatticeUniformity::bin_of(std::int32_t raw, unsigned tcc) {
  const std::int64_t t16 = 16LL * tcc;
  const std::int64_t num = (static_cast<std::int64_t>(raw) + t16 / 2) * static_cast<std::int64_t>(kBins);
  if (num <= 0) return 0;
  const std::int64_t b = (num + t16 - 1) / t16 - 1;  // ceil - 1
  return static_cast<std::size_t>(std::min<std::int64_t>(b, kBins - 1));
}

void LatticeUniformity::add(std::span<const std::int32_t> raw, unsigned tcc) {
  if (tcc == 0) throw std::invalid_argument("LatticeUniformity: tcc must be positive");
  const std::int32_t half = static_cast<std::int32_t>(8 * tcc);
  const double n = static_cast<double>(raw.size());
  const double t16 = 16.0 * tcc;
  for (std::int32_t v = -half; v <= half; ++v) {
    const double w = (v == -half || v == half) ? 0.5 : 1.0;
    expected_[bin_of(v, tcc)] += n * w / t16;
  }
  for (const std::int32_t v : raw) {
    if (v < -half || v > half) ++outside_;
    ++observed_[bin_of(std::clamp(v, -half, half), tcc)];
  }
  samples_ += raw.size();
}

LatticeUniformity::Result LatticeUniformity::result() const {
  Result r;
  r.samples = samples_;
  r.outside = outside_;
  for (std::size_t b = 0; b < kBins; ++b) {
    if (expected_[b] <= 0.0) continue;
    const double d = static_cast<double>(observed_[b]) - expected_[b];
    r.chi2 += d * d / expected_[b];
  }
  r.p_value = chi2_sf(r.chi2, r.df);
  return r;
}

}  // namespace sirf::stat
