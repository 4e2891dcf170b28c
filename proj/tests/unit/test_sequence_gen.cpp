// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "sirf/sequence_gen.hpp"

namespace {

using namespace sirf;

// GF(2)[x] arithmetic modulo the characteristic polynomial of the challenge LFSR.
// Feedback from state bits 63, 62, 60, 59 gives s[n+64] = s[n] + s[n+1] + s[n+3] + s[n+4],
// i.e. x^64 + x^4 + x^3 + x + 1.
constexpr std::uint64_t kLow = 0x1B;  // x^4 + x^3 + x + 1

std::uint64_t mulx(std::uint64_t a) { return (a << 1) ^ ((a >> 63) ? kLow : 0); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 63; i >= 0; --i) {
    r = mulx(r);
    if ((b >> i) & 1) r ^= a;
  }
  return r;
}

std::uint64_t powx(std::uint64_t e) {
  std::uint64_t result = 1;
  std::uint64_t base = 2;  // x
  while (e) {
    if (e & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return result;
}

TEST(Lfsr64, SeedRule) {
  EXPECT_EQ(lfsr64_seed(1).state(), 1u);
  EXPECT_EQ(lfsr64_seed(0).state(), 1u);
  EXPECT_EQ(lfsr64_seed(0xDEAD).state(), 0xDEADu);
}

TEST(Lfsr64, CharacteristicPolynomialIsPrimitive) {
  const std::vector<std::uint64_t> primes{3, 5, 17, 257, 641, 65537, 6700417};
  std::uint64_t prod = 1;
  for (auto p : primes) prod *= p;
  ASSERT_EQ(prod, ~0ULL);  // 2^64 - 1 is squarefree with these factors
  EXPECT_EQ(powx(~0ULL), 1u);
  for (auto q : primes) EXPECT_NE(powx(~0ULL / q), 1u) << q;
}

TEST(Lfsr64, OutputObeysPolynomialRecurrence) {
  Lfsr64 l(0x123456789ABCDEFULL);
  std::vector<unsigned> s;
  for (int i = 0; i < 5000; ++i) s.push_back(l.step());
  for (std::size_t n = 0; n + 64 < s.size(); ++n) {
    ASSERT_EQ(s[n + 64], s[n] ^ s[n + 1] ^ s[n + 3] ^ s[n + 4]) << n;
  }
}

TEST(Lfsr64, NoRepeatInMillionSteps) {
  Lfsr64 l(1);
  std::vector<std::uint64_t> seen;
  seen.reserve(1000000);
  for (int i = 0; i < 1000000; ++i) {
    l.step();
    seen.push_back(l.state());
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

TEST(ChallengeSchedule, Deterministic) {
  Lfsr64 a(1);
  Lfsr64 b(1);
  EXPECT_EQ(challenge_schedule(a), challenge_schedule(b));
  EXPECT_EQ(a.state(), b.state());
}

TEST(ChallengeSchedule, SeedsOneAndTwoDiffer) {
  Lfsr64 a(1);
  Lfsr64 b(2);
  const auto sa = challenge_schedule(a);
  const auto sb = challenge_schedule(b);
  int differ = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) differ += sa[i].word != sb[i].word;
  EXPECT_GE(differ, 120);
}

TEST(ChallengeSchedule, NoDuplicateWords) {
  Lfsr64 a(1);
  const auto s = challenge_schedule(a);
  ASSERT_EQ(s.size(), 128u);
  std::set<std::uint64_t> w;
  for (const auto& c : s) w.insert(c.word);
  EXPECT_EQ(w.size(), 128u);
}

TEST(PairSeeds, Examples) {
  EXPECT_EQ(pair_seeds(0), (std::pair<std::uint16_t, std::uint16_t>{0, 2047}));
  EXPECT_EQ(pair_seeds(1), (std::pair<std::uint16_t, std::uint16_t>{1, 2046}));
  EXPECT_EQ(pair_seeds(2047), (std::pair<std::uint16_t, std::uint16_t>{2047, 0}));
  EXPECT_THROW(pair_seeds(2048), std::invalid_argument);
  for (unsigned i = 0; i < 2048; ++i) {
    const auto [a, b] = pair_seeds(i);
    ASSERT_EQ(a + b, 2047);
  }
}

TEST(Selector11, CycleCoversAllStatesFromEverySeed) {
  // brute force: period from state 0 is 2048 and passes through every state once
  std::vector<int> seen(2048, 0);
  std::uint16_t s = 0;
  for (int i = 0; i < 2048; ++i) {
    ++seen[s];
    s = Selector11::next(s);
  }
  EXPECT_EQ(s, 0);
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST(Selector11, ExtensionSplicesZeroBetween0x400And0x001) {
  EXPECT_EQ(Selector11::next(0x400), 0);
  EXPECT_EQ(Selector11::next(0), 1);
}

TEST(SelectIndices, EachSideIsABijection) {
  for (unsigned it : {0u, 1u, 777u, 2047u}) {
    const auto [sa, sb] = pair_seeds(it);
    const IndexPairs p = select_indices(sa, sb);
    std::vector<int> ca(2048, 0);
    std::vector<int> cb(2048, 0);
    for (std::size_t j = 0; j < kSetSize; ++j) {
      ++ca[p.ia[j]];
      ++cb[p.ib[j]];
    }
    EXPECT_TRUE(std::all_of(ca.begin(), ca.end(), [](int c) { return c == 1; }));
    EXPECT_TRUE(std::all_of(cb.begin(), cb.end(), [](int c) { return c == 1; }));
    EXPECT_EQ(p.ia[0], sa);
    EXPECT_EQ(p.ib[0], sb);
  }
}

TEST(SelectIndices, NoDuplicatePairWithinIteration) {
  const IndexPairs p = select_indices(5, 2042);
  std::set<std::pair<int, int>> s;
  for (std::size_t j = 0; j < kSetSize; ++j) s.insert({p.ia[j], p.ib[j]});
  EXPECT_EQ(s.size(), kSetSize);
  EXPECT_EQ(select_indices(5, 2042).ia, p.ia);
}

// The lockstep selectors pair ia with ib at a fixed cycle offset per iteration, so
// iterations whose seeds sit at the same offset repeat the same pair set.
// Exhaustive tally over the full loop, frozen.
TEST(SelectIndices, FullLoopPairCoverageTally) {
  std::vector<std::uint8_t> count(2048 * 2048, 0);
  std::set<int> offsets;
  std::vector<int> pos(2048);
  std::uint16_t s = 0;
  for (int i = 0; i < 2048; ++i) {
    pos[s] = i;
    s = Selector11::next(s);
  }
  for (unsigned it = 0; it < 2048; ++it) {
    const auto [sa, sb] = pair_seeds(it);
    offsets.insert((pos[sb] - pos[sa] + 2048) % 2048);
    const IndexPairs p = select_indices(sa, sb);
    for (std::size_t j = 0; j < kSetSize; ++j) ++count[p.ia[j] * 2048 + p.ib[j]];
  }
  std::size_t distinct = 0;
  int mx = 0;
  for (auto c : count) {
    distinct += c > 0;
    mx = std::max<int>(mx, c);
  }
  EXPECT_EQ(offsets.size(), 1694u);
  EXPECT_EQ(distinct, 3469312u);
  EXPECT_EQ(mx, 3);
}

}  // namespace
