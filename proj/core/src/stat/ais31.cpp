// SPDX-License-Identifier: Apache-2.0
#include "sirf/stat/ais31.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>

#include "sirf/errors.hpp"
#include "sirf/stat/thresholds.hpp"

namespace sirf::stat {

namespace th = thresholds;

namespace {

void require_block(const BitSequence& block) {
  if (block.size() != th::kBlockBits) throw std::invalid_argument("AIS-31 block must be 20000 bits");
}

/// Packed words, MSB-first, with one zero word of padding so window reads never run off the end.
class WordView {
 public:
  explicit WordView(const BitSequence& s) : words_((s.size() + 63) / 64 + 1, 0) {
    const auto b = s.bytes();
    for (std::size_t i = 0; i < b.size(); ++i) {
      words_[i / 8] |= static_cast<std::uint64_t>(b[i]) << (56 - 8 * (i % 8));
    }
  }
  /// Bits [pos, pos + 64), first bit in the MSB.
  std::uint64_t at(std::size_t pos) const {
    const std::size_t w = pos / 64;
    const unsigned sh = pos % 64;
    if (sh == 0) return words_[w];
    return (words_[w] << sh) | (words_[w + 1] >> (64 - sh));
  }
  /// Number of positions j in [from, from + n) with bit j != bit j + tau.
  long xor_count(std::size_t from, std::size_t n, std::size_t tau) const {
    long c = 0;
    std::size_t j = 0;
    for (; j + 64 <= n; j += 64) c += std::popcount(at(from + j) ^ at(from + j + tau));
    if (j < n) {
      const std::uint64_t mask = ~0ULL << (64 - (n - j));
      c += std::popcount((at(from + j) ^ at(from + j + tau)) & mask);
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

BlockResult ais31_t1_monobit(const BitSequence& block) {
  require_block(block);
  const long ones = static_cast<long>(block.count_ones());
  return {static_cast<double>(ones), ones > th::kT1OnesLow && ones < th::kT1OnesHigh};
}

BlockResult ais31_t2_poker(const BitSequence& block) {
  require_block(block);
  std::array<long, 16> f{};
  for (std::size_t i = 0; i < th::kBlockBits; i += 4) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) v = (v << 1) | static_cast<unsigned>(block[i + k]);
    ++f[v];
  }
  double s = 0.0;
  for (long c : f) s += static_cast<double>(c) * static_cast<double>(c);
  const double x = 16.0 / 5000.0 * s - 5000.0;
  return {x, x > th::kT2PokerLow && x < th::kT2PokerHigh};
}

std::array<std::array<long, 6>, 2> ais31_run_counts(const BitSequence& block) {
  std::array<std::array<long, 6>, 2> c{};
  std::size_t i = 0;
  const std::size_t n = block.size();
  while (i < n) {
    const bool b = block[i];
    std::size_t j = i + 1;
    while (j < n && block[j] == b) ++j;
    ++c[b][std::min<std::size_t>(j - i, 6) - 1];
    i = j;
  }
  return c;
}

BlockResult ais31_t3_runs(const BitSequence& block) {
  require_block(block);
  const auto c = ais31_run_counts(block);
  int bad = 0;
  for (int b = 0; b < 2; ++b) {
    for (int l = 0; l < 6; ++l) {
      if (c[b][l] < th::kT3Runs[l].lo || c[b][l] > th::kT3Runs[l].hi) ++bad;
    }
  }
  return {static_cast<double>(bad), bad == 0};
}

BlockResult ais31_t4_long_run(const BitSequence& block) {
  require_block(block);
  std::size_t longest = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    run = (i > 0 && block[i] == block[i - 1]) ? run + 1 : 1;
    longest = std::max(longest, run);
  }
  return {static_cast<double>(longest), longest < th::kT4LongRun};
}

BlockResult ais31_t5_autocorrelation(const BitSequence& block) {
  require_block(block);
  const WordView w(block);
  std::size_t best_tau = 1;
  long best_dev = -1;
  for (std::size_t tau = 1; tau <= th::kT5MaxShift; ++tau) {
    const long dev = std::labs(w.xor_count(0, th::kT5Window, tau) - 2500);
    if (dev > best_dev) {
      best_dev = dev;
      best_tau = tau;
    }
  }
  const long z = w.xor_count(10000, th::kT5Window, best_tau);
  return {static_cast<double>(z), z > th::kT5Low && z < th::kT5High};
}

bool Ais31Result::all_pass() const {
  return !verdicts.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const TestVerdict& v) { return v.pass; });
}

namespace {

TestVerdict run_t0(const BitSequence& seq, std::size_t& pos) {
  const std::string rel = "all 65536 48-bit words distinct";
  if (seq.size() < pos + th::kT0Words * th::kT0WordBits) return insufficient("T0 disjointness", rel);
  const WordView w(seq);
  std::vector<std::uint64_t> words(th::kT0Words);
  for (auto& x : words) {
    x = w.at(pos) >> 16;
    pos += th::kT0WordBits;
  }
  std::sort(words.begin(), words.end());
  const auto dups = static_cast<double>(words.size() - static_cast<std::size_t>(
                                            std::unique(words.begin(), words.end()) - words.begin()));
  TestVerdict v{"T0 disjointness", {{"duplicates", dups}}, rel, dups == 0.0, false};
  return v;
}

TestVerdict pass_count_verdict(std::string name, std::size_t passed, std::string what) {
  TestVerdict v;
  v.name = std::move(name);
  v.values = {{"blocks_passed", static_cast<double>(passed)}, {"blocks", static_cast<double>(th::kBlocks)}};
  v.threshold = "257/257 blocks: " + what;
  v.pass = passed == th::kBlocks;
  return v;
}

/// Collects disjoint m-bit tuples until every prefix class holds `need` tuples.
/// counts[prefix][last bit]; prefix has m-1 bits. Returns false if bits run out.
bool collect_tuples(const BitSequence& seq, std::size_t& pos, unsigned m, std::size_t need,
                    std::vector<std::array<long, 2>>& counts) {
  const std::size_t classes = std::size_t{1} << (m - 1);
  counts.assign(classes, {0, 0});
  std::size_t full = 0;
  while (full < classes) {
    if (pos + m > seq.size()) return false;
    unsigned prefix = 0;
    for (unsigned k = 0; k + 1 < m; ++k) prefix = (prefix << 1) | static_cast<unsigned>(seq[pos + k]);
    const unsigned last = seq[pos + m - 1];
    pos += m;
    auto& c = counts[prefix];
    if (static_cast<std::size_t>(c[0] + c[1]) < need) {
      ++c[last];
      if (static_cast<std::size_t>(c[0] + c[1]) == need) ++full;
    }
  }
  return true;
}

double homogeneity(const std::array<long, 2>& a, const std::array<long, 2>& b) {
  const double na = static_cast<double>(a[0] + a[1]);
  const double nb = static_cast<double>(b[0] + b[1]);
  double chi = 0.0;
  for (int bit = 0; bit < 2; ++bit) {
    const double p = static_cast<double>(a[bit] + b[bit]) / (na + nb);
    if (p == 0.0) continue;
    const double ea = na * p;
    const double eb = nb * p;
    chi += (a[bit] - ea) * (a[bit] - ea) / ea + (b[bit] - eb) * (b[bit] - eb) / eb;
  }
  return chi;
}

}  // namespace

TestVerdict ais31_t8_entropy(const BitSequence& seq, std::size_t first) {
  const std::string rel = ">= " + fmt(th::kT8MinEntropy);
  const std::size_t need = (th::kT8Q + th::kT8K) * th::kT8L;
  if (seq.size() < first + need) return insufficient("T8 entropy", rel);

  const std::size_t total = th::kT8Q + th::kT8K;
  // g[i] = (1/ln 2) * sum_{k=1}^{i-1} 1/k
  std::vector<double> g(total + 1, 0.0);
  double h = 0.0;
  for (std::size_t i = 2; i <= total; ++i) {
    h += 1.0 / static_cast<double>(i - 1);
    g[i] = h / std::numbers::ln2;
  }
  std::array<std::size_t, 256> last{};  // 1-based block index of last occurrence, 0 = none
  double sum = 0.0;
  for (std::size_t n = 1; n <= total; ++n) {
    unsigned v = 0;
    const std::size_t base = first + (n - 1) * th::kT8L;
    for (std::size_t k = 0; k < th::kT8L; ++k) v = (v << 1) | static_cast<unsigned>(seq[base + k]);
    if (n > th::kT8Q) {
      const std::size_t a = last[v] ? n - last[v] : n;
      sum += g[a];
    }
    last[v] = n;
  }
  const double f = sum / static_cast<double>(th::kT8K);
  return TestVerdict{"T8 entropy", {{"f", f}}, rel, f >= th::kT8MinEntropy, false};
}

Ais31Result ais31_suite(const BitSequence& seq) {
  Ais31Result r;
  std::size_t pos = 0;
  r.verdicts.push_back(run_t0(seq, pos));

  const char* names[] = {"T1 monobit", "T2 poker", "T3 runs", "T4 long run", "T5 autocorrelation"};
  const char* rels[] = {"9654 < ones < 10346", "1.03 < X < 57.4", "all run counts within bounds",
                        "no run >= 34", "2326 < Z < 2674"};
  if (r.verdicts[0].insufficient_data || seq.size() < pos + th::kBlocks * th::kBlockBits) {
    for (int t = 0; t < 5; ++t) r.verdicts.push_back(insufficient(names[t], rels[t]));
  } else {
    std::array<std::size_t, 5> passed{};
    for (std::size_t b = 0; b < th::kBlocks; ++b) {
      const BitSequence block = seq.slice(pos, th::kBlockBits);
      pos += th::kBlockBits;
      passed[0] += ais31_t1_monobit(block).pass;
      passed[1] += ais31_t2_poker(block).pass;
      passed[2] += ais31_t3_runs(block).pass;
      passed[3] += ais31_t4_long_run(block).pass;
      passed[4] += ais31_t5_autocorrelation(block).pass;
    }
    for (int t = 0; t < 5; ++t) r.verdicts.push_back(pass_count_verdict(names[t], passed[t], rels[t]));
  }

  // T6
  {
    const std::string rel = "|p1 - 0.5| < 0.025 and |v01 - v11| < 0.02";
    bool ok = seq.size() >= pos + th::kT6aBits;
    TestVerdict v;
    if (ok) {
      const double p1 = static_cast<double>(seq.slice(pos, th::kT6aBits).count_ones()) / th::kT6aBits;
      pos += th::kT6aBits;
      std::vector<std::array<long, 2>> c;
      ok = collect_tuples(seq, pos, 2, th::kT6bPairs, c);
      if (ok) {
        const double v01 = static_cast<double>(c[0][1]) / th::kT6bPairs;
        const double v11 = static_cast<double>(c[1][1]) / th::kT6bPairs;
        const double da = std::fabs(p1 - 0.5);
        const double db = std::fabs(v01 - v11);
        v = TestVerdict{"T6 uniform distribution",
                        {{"abs_p1_minus_half", da}, {"abs_v01_minus_v11", db}},
                        rel,
                        da < th::kT6aMaxDev && db < th::kT6bMaxDiff,
                        false};
      }
    }
    r.verdicts.push_back(ok ? v : insufficient("T6 uniform distribution", rel));
  }

  // T7
  {
    const std::string rel = "every homogeneity statistic < 15.13";
    std::vector<std::array<long, 2>> c3;
    std::vector<std::array<long, 2>> c4;
    bool ok = r.verdicts.back().insufficient_data == false && collect_tuples(seq, pos, 3, th::kT7Tuples, c3) &&
              collect_tuples(seq, pos, 4, th::kT7Tuples, c4);
    if (ok) {
      TestVerdict v{"T7 homogeneity", {}, rel, true, false};
      // prefix (b1 b2): compare first bit 0 vs 1 with the same second bit
      v.values.push_back({"T7a_x0", homogeneity(c3[0b00], c3[0b10])});
      v.values.push_back({"T7a_x1", homogeneity(c3[0b01], c3[0b11])});
      for (unsigned s = 0; s < 4; ++s) {
        v.values.push_back({"T7b_x" + std::to_string(s >> 1) + std::to_string(s & 1),
                            homogeneity(c4[s], c4[4 + s])});
      }
      for (const auto& kv : v.values) v.pass = v.pass && kv.second < th::kT7Chi2;
      r.verdicts.push_back(v);
    } else {
      r.verdicts.push_back(insufficient("T7 homogeneity", rel));
    }
  }

  r.verdicts.push_back(ais31_t8_entropy(seq, pos));
  if (!r.verdicts.back().insufficient_data) pos += (th::kT8Q + th::kT8K) * th::kT8L;
  r.bits_consumed = pos;
  return r;
}

}  // namespace sirf::stat
