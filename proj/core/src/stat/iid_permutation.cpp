// SPDX-License-Identifier: Apache-2.0
#include "sirf/stat/iid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <zlib.h>

#include "sirf/stat/thresholds.hpp"

namespace sirf::stat {

namespace {

constexpr std::size_t kTests = 11;

std::vector<std::uint8_t> ones_per_byte(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out(bits.size() / 8 + (bits.size() % 8 ? 1 : 0), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) out[i / 8] = static_cast<std::uint8_t>(out[i / 8] + bits[i]);
  return out;
}

std::vector<std::uint8_t> byte_values(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out(bits.size() / 8 + (bits.size() % 8 ? 1 : 0), 0);
  for (std::size_t i = 0; i < bits.size(); ++i) out[i / 8] |= static_cast<std::uint8_t>(bits[i] << (7 - i % 8));
  return out;
}

struct RunStats {
  double count;
  double longest;
};

/// Runs over a +/-1 sequence given as booleans.
template <typename F>
RunStats runs(std::size_t n, F sign) {
  if (n == 0) return {0, 0};
  double count = 1;
  double longest = 0;
  double run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (sign(i) == sign(i - 1)) {
      ++run;
    } else {
      ++count;
      longest = std::max(longest, run);
      run = 1;
    }
  }
  return {count, std::max(longest, run)};
}

double compressed_size(std::span<const std::uint8_t> bits) {
  std::string text;
  text.reserve(bits.size() * 2);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i) text.push_back(' ');
    text.push_back(bits[i] ? '1' : '0');
  }
  uLongf dest_len = compressBound(static_cast<uLong>(text.size()));
  std::vector<Bytef> dest(dest_len);
  if (compress2(dest.data(), &dest_len, reinterpret_cast<const Bytef*>(text.data()),
                static_cast<uLong>(text.size()), Z_DEFAULT_COMPRESSION) != Z_OK) {
    return 0.0;
  }
  return static_cast<double>(dest_len);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // unbiased draw in [0, n)
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::mt19937_64 permutation_rng(std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

const std::array<std::string, 11>& iid_test_names() {
  static const std::array<std::string, 11> names{
      "excursion",        "numDirectionalRuns", "lenDirectionalRuns", "numIncreasesDecreases",
      "numRunsMedian",    "lenRunsMedian",      "avgCollision",       "maxCollision",
      "periodicity",      "covariance",         "compression"};
  return names;
}

const std::array<std::string, kIidSubStats>& iid_sub_names() {
  static const std::array<std::string, kIidSubStats> names{
      "excursion",       "numDirectionalRuns", "lenDirectionalRuns", "numIncreasesDecreases", "numRunsMedian",
      "lenRunsMedian",   "avgCollision",       "maxCollision",       "periodicity(1)",        "periodicity(2)",
      "periodicity(8)",  "periodicity(16)",    "periodicity(32)",    "covariance(1)",         "covariance(2)",
      "covariance(8)",   "covariance(16)",     "covariance(32)",     "compression"};
  return names;
}

std::size_t iid_test_of(std::size_t sub) {
  if (sub < 8) return sub;
  if (sub < 13) return 8;
  if (sub < 18) return 9;
  return 10;
}

std::array<double, kIidSubStats> iid_statistics(std::span<const std::uint8_t> bits) {
  std::array<double, kIidSubStats> s{};
  const std::size_t n = bits.size();

  std::size_t ones = 0;
  for (auto b : bits) ones += b;
  const double mean = static_cast<double>(ones) / static_cast<double>(n);
  double run = 0.0;
  double exc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    run += bits[i];
    exc = std::max(exc, std::fabs(run - static_cast<double>(i + 1) * mean));
  }
  s[0] = exc;

  const auto c1 = ones_per_byte(bits);
  const std::size_t m = c1.size();
  if (m >= 2) {
    auto up = [&c1](std::size_t i) { return c1[i] <= c1[i + 1]; };
    const RunStats d = runs(m - 1, up);
    s[1] = d.count;
    s[2] = d.longest;
    double pos = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) pos += up(i);
    s[3] = std::max(pos, static_cast<double>(m - 1) - pos);
  }

  // median of binary data is 0.5
  const RunStats med = runs(n, [&bits](std::size_t i) { return bits[i] != 0; });
  s[4] = med.count;
  s[5] = med.longest;

  const auto c2 = byte_values(bits);
  {
    std::vector<double> col;
    std::array<bool, 256> seen{};
    std::size_t i = 0;
    while (i < c2.size()) {
      seen.fill(false);
      std::size_t j = 0;
      bool hit = false;
      while (i + j < c2.size()) {
        if (seen[c2[i + j]]) {
          col.push_back(static_cast<double>(j));
          i += j;
          hit = true;
          break;
        }
        seen[c2[i + j]] = true;
        ++j;
      }
      if (!hit) break;
      ++i;
    }
    if (!col.empty()) {
      double sum = 0;
      double mx = 0;
      for (double c : col) {
        sum += c;
        mx = std::max(mx, c);
      }
      s[6] = sum / static_cast<double>(col.size());
      s[7] = mx;
    }
  }

  for (std::size_t l = 0; l < kIidLags.size(); ++l) {
    const std::size_t p = kIidLags[l];
    double per = 0;
    double cov = 0;
    for (std::size_t i = 0; i + p < m; ++i) {
      per += c1[i] == c1[i + p];
      cov += static_cast<double>(c1[i]) * c1[i + p];
    }
    s[8 + l] = per;
    s[13 + l] = cov;
  }

  s[18] = compressed_size(bits);
  return s;
}

bool iid_counter_passes(std::uint64_t c0, std::uint64_t c1, std::uint64_t permutations) {
  const double p = static_cast<double>(permutations);
  const double f = thresholds::kIidFailFraction;
  return !(static_cast<double>(c0 + c1) <= f * p || static_cast<double>(c0) >= (1.0 - f) * p);
}

bool IidReport::all_pass() const {
  return !tests.empty() && std::all_of(tests.begin(), tests.end(), [](const IidTestResult& t) { return t.pass; });
}

IidReport iid_permutation_suite(const BitSequence& seq, std::uint64_t permutations, std::uint64_t seed,
                                unsigned threads) {
  if (permutations < 100) throw std::invalid_argument("iid_permutation_suite: need at least 100 permutations");
  if (seq.size() < 64) throw std::invalid_argument("iid_permutation_suite: sequence too short");
  const auto bits = seq.unpack();
  const auto t = iid_statistics(bits);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, permutations));

  std::vector<std::array<std::array<std::uint64_t, 2>, kIidSubStats>> partial(threads);
  auto worker = [&](unsigned w) {
    std::vector<std::uint8_t> buf(bits.size());
    auto& cnt = partial[w];
    for (std::uint64_t k = w; k < permutations; k += threads) {
      std::copy(bits.begin(), bits.end(), buf.begin());
      auto rng = permutation_rng(seed, k);
      for (std::size_t i = buf.size() - 1; i > 0; --i) std::swap(buf[i], buf[bounded(rng, i + 1)]);
      const auto tp = iid_statistics(buf);
      for (std::size_t j = 0; j < kIidSubStats; ++j) {
        if (tp[j] < t[j]) {
          ++cnt[j][0];
        } else if (tp[j] == t[j]) {
          ++cnt[j][1];
        }
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  IidReport rep;
  rep.permutations = permutations;
  rep.degenerate_input = std::all_of(bits.begin(), bits.end(), [&](std::uint8_t b) { return b == bits[0]; });
  rep.tests.resize(kTests);
  for (std::size_t i = 0; i < kTests; ++i) {
    rep.tests[i].name = iid_test_names()[i];
    rep.tests[i].pass = true;
  }
  for (std::size_t j = 0; j < kIidSubStats; ++j) {
    IidCounter c{iid_sub_names()[j], t[j], 0, 0, false};
    for (const auto& p : partial) {
      c.c0 += p[j][0];
      c.c1 += p[j][1];
    }
    c.pass = iid_counter_passes(c.c0, c.c1, permutations);
    auto& test = rep.tests[iid_test_of(j)];
    test.pass = test.pass && c.pass;
    test.sub.push_back(c);
  }
  return rep;
}

}  // namespace sirf::stat
