// SPDX-License-Identifier: Apache-2.0
#include "sirf/stat/pearson.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "sirf/errors.hpp"
#include "sirf/stat/thresholds.hpp"

namespace sirf::stat {

namespace {

/// Centers and scales to unit norm; returns false if constant.
bool normalize(std::span<const double> x, std::vector<double>& out) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double ss = 0.0;
  out.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] - mean;
    ss += out[i] * out[i];
  }
  if (!(ss > 0.0)) return false;
  const double inv = 1.0 / std::sqrt(ss);
  for (double& v : out) v *= inv;
  return true;
}

double dot_clamped(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return std::clamp(s, -1.0, 1.0);
}

}  // namespace

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("pearson: length mismatch");
  if (a.size() < 2) throw std::invalid_argument("pearson: need N >= 2");
  std::vector<double> na;
  std::vector<double> nb;
  if (!normalize(a, na) || !normalize(b, nb)) throw UndefinedCorrelation("pearson: constant input");
  return dot_clamped(na, nb);
}

std::vector<SetPair> sample_pairs(std::size_t k, const PccSampling& sampling) {
  if (k < 2) throw std::invalid_argument("sample_pairs: need at least 2 sets");
  bool all = sampling.mode == PccSampling::Mode::all_pairs ||
             (sampling.mode == PccSampling::Mode::automatic && k <= thresholds::kPccAllPairsMaxSets);
  std::vector<SetPair> out;
  if (all) {
    out.reserve(k * (k - 1) / 2);
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = i + 1; j < k; ++j) out.emplace_back(i, j);
    }
    return out;
  }
  std::mt19937_64 rng(sampling.seed);
  out.reserve(sampling.pairs);
  while (out.size() < sampling.pairs) {
    const auto i = static_cast<std::uint32_t>(rng() % k);
    const auto j = static_cast<std::uint32_t>(rng() % k);
    if (i == j) continue;
    out.emplace_back(std::min(i, j), std::max(i, j));
  }
  return out;
}

std::uint64_t PccReport::count_at_least(double abs_r) const {
  return static_cast<std::uint64_t>(
      std::count_if(abs_values.begin(), abs_values.end(), [abs_r](double v) { return v >= abs_r; }));
}

PccReport pcc_scan(const std::vector<std::vector<double>>& sets, const std::vector<SetPair>& pairs,
                   unsigned threads) {
  if (sets.size() < 2) throw std::invalid_argument("pcc_scan: need at least 2 sets");
  const std::size_t n = sets.front().size();
  PccReport rep;
  std::vector<std::vector<double>> norm(sets.size());
  std::vector<char> ok(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].size() != n) throw std::invalid_argument("pcc_scan: sets differ in length");
    ok[s] = normalize(sets[s], norm[s]);
    if (!ok[s]) ++rep.degenerate_sets;
  }

  std::vector<double> r(pairs.size(), std::nan(""));
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t p = from; p < to; ++p) {
      const auto [i, j] = pairs[p];
      if (ok[i] && ok[j]) r[p] = dot_clamped(norm[i], norm[j]);
    }
  };
  if (threads <= 1 || pairs.size() < 1024) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t a = std::min(pairs.size(), t * chunk);
      pool.emplace_back(work, a, std::min(pairs.size(), a + chunk));
    }
    for (auto& th : pool) th.join();
  }

  rep.abs_values.reserve(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (std::isnan(r[p])) {
      ++rep.pairs_skipped;
      continue;
    }
    ++rep.pairs_examined;
    const double a = std::fabs(r[p]);
    rep.abs_values.push_back(a);
    const PccEntry e{pairs[p].first, pairs[p].second, r[p]};
    if (a > rep.max_abs_r) {
      rep.max_abs_r = a;
      rep.max_pair = e;
    }
    const auto bin = std::min<std::size_t>(63, static_cast<std::size_t>((r[p] + 1.0) * 32.0));
    ++rep.histogram[bin];
    if (a > thresholds::kPccHighAbs) rep.high.push_back(e);
  }
  return rep;
}

}  // namespace sirf::stat
