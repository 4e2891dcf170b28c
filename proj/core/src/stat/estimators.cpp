// SPDX-License-Identifier: Apache-2.0
#include "sirf/stat/estimators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "sirf/errors.hpp"
#include "sirf/stat/thresholds.hpp"

namespace sirf::stat {

namespace {

constexpr double kZ = thresholds::kZAlpha;

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

/// Expected compression-test statistic for one symbol of probability z,
/// dictionary d, n blocks. Sums log2(i) * z^2 (1-z)^(i-1) over the window
/// lengths; the terms are generated incrementally since (1-z)^i is shared.
double g_func(double z, long d, long n) {
  Kahan a;
  Kahan first;
  const long double bterm = 1.0L - static_cast<long double>(z);
  long double bi = bterm;
  for (long i = 2; i <= d; ++i) {
    a.add(static_cast<double>(std::log2(static_cast<long double>(i)) * bi));
    bi *= bterm;
  }
  const double ad1 = a.sum;
  bool truncated = false;
  for (long i = d + 1; i <= n - 1; ++i) {
    const long double ai = std::log2(static_cast<long double>(i)) * bi;
    a.add(static_cast<double>(ai));
    const long double scaled = static_cast<long double>(n - i) * ai;
    if (static_cast<double>(scaled) > 0.0) {
      first.add(static_cast<double>(scaled));
    } else {
      truncated = true;
      break;
    }
    bi *= bterm;
  }
  first.add(static_cast<double>(n - d) * ad1);
  if (!truncated) a.add(static_cast<double>(std::log2(static_cast<long double>(n)) * bi));
  return 1.0 / static_cast<double>(n - d) * z * (z * first.sum + (a.sum - ad1));
}

double compression_expectation(double p, long d, long n) {
  constexpr double k = 64.0;
  const double q = (1.0 - p) / (k - 1.0);
  return g_func(p, d, n) + (k - 1.0) * g_func(q, d, n);
}

}  // namespace

double mcv_estimate(std::span<const std::uint8_t> bits) {
  if (bits.size() < 2) throw InsufficientData("mcv_estimate needs at least 2 bits");
  const auto ones = static_cast<double>(std::count(bits.begin(), bits.end(), 1));
  const double len = static_cast<double>(bits.size());
  const double p = std::max(ones, len - ones) / len;
  const double pu = std::min(1.0, p + kZ * std::sqrt(p * (1.0 - p) / (len - 1.0)));
  return -std::log2(pu);
}

double collision_estimate(std::span<const std::uint8_t> bits) {
  const std::size_t len = bits.size();
  if (len < 3) throw InsufficientData("collision_estimate needs at least 3 bits");
  std::size_t i = 0;
  std::size_t v = 0;
  double sq = 0.0;
  while (i + 1 < len) {
    std::size_t t;
    if (bits[i] == bits[i + 1]) {
      t = 2;
    } else if (i + 2 < len) {
      t = 3;
    } else {
      break;
    }
    ++v;
    sq += static_cast<double>(t * t);
    i += t;
  }
  if (v < 2) throw InsufficientData("collision_estimate: fewer than 2 collisions");
  const double mean = static_cast<double>(i) / static_cast<double>(v);
  const double s = std::sqrt((sq - static_cast<double>(i) * mean) / static_cast<double>(v - 1));
  double x = mean - kZ * s / std::sqrt(static_cast<double>(v));
  x = std::max(x, 2.0);
  if (x >= 2.5) return 1.0;
  const double p = 0.5 + std::sqrt(1.25 - 0.5 * x);
  return -std::log2(p);
}

double markov_estimate(std::span<const std::uint8_t> bits) {
  const std::size_t len = bits.size();
  if (len < 2) throw InsufficientData("markov_estimate needs at least 2 bits");
  std::array<std::array<double, 2>, 2> c{};
  for (std::size_t i = 0; i + 1 < len; ++i) c[bits[i] & 1][bits[i + 1] & 1] += 1.0;
  const double c0 = c[0][0] + c[0][1];
  const double c1 = c[1][0] + c[1][1];
  const double p00 = c0 > 0 ? c[0][0] / c0 : 0.0;
  const double p01 = c0 > 0 ? 1.0 - p00 : 0.0;
  const double p10 = c1 > 0 ? c[1][0] / c1 : 0.0;
  const double p11 = c1 > 0 ? 1.0 - p10 : 0.0;
  const double zeros = c0 + (bits[len - 1] == 0 ? 1.0 : 0.0);
  const double p0 = zeros / static_cast<double>(len);
  const double p1 = 1.0 - p0;

  // Most likely 128-bit paths: constant, alternating, and one switch then constant.
  double h = 128.0;
  auto take = [&h](bool ok, double v) {
    if (ok) h = std::min(h, v);
  };
  take(p00 > 0, -std::log2(p0) - 127.0 * std::log2(p00));
  take(p01 > 0 && p10 > 0, -std::log2(p0) - 64.0 * std::log2(p01) - 63.0 * std::log2(p10));
  take(p01 > 0 && p11 > 0, -std::log2(p0) - std::log2(p01) - 126.0 * std::log2(p11));
  take(p10 > 0 && p00 > 0, -std::log2(p1) - std::log2(p10) - 126.0 * std::log2(p00));
  take(p10 > 0 && p01 > 0, -std::log2(p1) - 64.0 * std::log2(p10) - 63.0 * std::log2(p01));
  take(p11 > 0, -std::log2(p1) - 127.0 * std::log2(p11));
  return std::min(h / 128.0, 1.0);
}

double compression_estimate(std::span<const std::uint8_t> bits) {
  constexpr long kB = 6;
  constexpr long kD = 1000;
  constexpr std::size_t kAlph = 1U << kB;
  const long n = static_cast<long>(bits.size()) / kB;
  if (n <= kD) throw InsufficientData("compression_estimate needs more than 1000 6-bit blocks");

  auto block = [&bits](long i) {
    unsigned v = 0;
    for (long j = 0; j < kB; ++j) v = (v << 1) | (bits[static_cast<std::size_t>(i * kB + j)] & 1U);
    return v;
  };
  std::array<long, kAlph> dict{};
  for (long i = 0; i < kD; ++i) dict[block(i)] = i + 1;
  Kahan x;
  Kahan x2;
  for (long i = kD; i < n; ++i) {
    const unsigned b = block(i);
    const double l = std::log2(static_cast<double>(i + 1 - dict[b]));
    x.add(l);
    x2.add(l * l);
    dict[b] = i + 1;
  }
  const double v = static_cast<double>(n - kD);
  const double mean = x.sum / v;
  const double sigma = 0.5907 * std::sqrt(x2.sum / (v - 1.0) - mean * mean);
  const double target = mean - kZ * sigma / std::sqrt(v);

  const double lo_p = 1.0 / static_cast<double>(kAlph);
  if (!(compression_expectation(lo_p, kD, n) > target)) return 1.0;

  // The expectation decreases in p; bisect for the p that meets the bound.
  double lo = lo_p;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double val = compression_expectation(mid, kD, n);
    if (val == target) {
      lo = hi = mid;
      break;
    }
    if (target < val) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double p = 0.5 * (lo + hi);
  if (!(p > lo_p)) return 1.0;
  return -std::log2(p) / kB;
}

double EstimatorSuite::minimum() const { return std::min({mcv, collision, markov, compression}); }

EstimatorSuite estimate_all(const BitSequence& seq) {
  const auto u = seq.unpack();
  return {mcv_estimate(u), collision_estimate(u), markov_estimate(u), compression_estimate(u)};
}

}  // namespace sirf::stat
