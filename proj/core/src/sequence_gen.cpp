// SPDX-License-Identifier: Apache-2.0
#include "sirf/sequence_gen.hpp"

#include <stdexcept>
#include <string>

namespace sirf {

std::vector<Challenge> challenge_schedule(Lfsr64& st) {
  std::vector<Challenge> out(kChallengesPerPhase);
  for (auto& c : out) c.word = st.next_word();
  return out;
}

std::pair<std::uint16_t, std::uint16_t> pair_seeds(unsigned iteration) {
  if (iteration >= kIterations) {
    throw std::invalid_argument("pair_seeds: iteration " + std::to_string(iteration) + " out of range");
  }
  return {static_cast<std::uint16_t>(iteration), static_cast<std::uint16_t>(2047 - iteration)};
}

IndexPairs select_indices(std::uint16_t seed_a, std::uint16_t seed_b) {
  if (seed_a > 2047 || seed_b > 2047) throw std::invalid_argument("select_indices: seed out of range");
  IndexPairs p;
  Selector11 a(seed_a);
  Selector11 b(seed_b);
  for (std::size_t j = 0; j < kSetSize; ++j) {
    p.ia[j] = a.state();
    p.ib[j] = b.state();
    a.step();
    b.step();
  }
  return p;
}

}  // namespace sirf
