// SPDX-License-Identifier: Apache-2.0
#include "sirf/nonce_distill.hpp"

#include <cstdio>
#include <stdexcept>

namespace sirf {

std::string NonceBuffer::to_hex() const {
  std::string out;
  for (std::size_t byte = 0; byte * 8 < kNonceBits; ++byte) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 8 && byte * 8 + b < kNonceBits; ++b) {
      if (bits[byte * 8 + b]) v |= 1U << b;
    }
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", v);
    out += buf;
  }
  return out;
}

NonceBuffer distill(const BitSequence& lsb_stream) {
  if (lsb_stream.size() != 4096) throw std::invalid_argument("distill: expected 4096 LSBs");
  NonceBuffer n;
  for (std::size_t k = 0; k < kNonceBits; ++k) {
    bool p = false;
    for (std::size_t i = 0; i < kLsbsPerNonceBit; ++i) p ^= lsb_stream[k * kLsbsPerNonceBit + i];
    n.bits[k] = p;
  }
  return n;
}

std::uint64_t derive_seed(const NonceBuffer& nonce) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kSeedWindow; ++i) {
    if (nonce.bits[i]) s |= 1ULL << i;
  }
  return s;
}

IterationParams derive_params(const NonceBuffer& nonce, unsigned iteration) {
  const std::size_t off = kParamWindowStart + kParamSlotBits * (iteration % kParamSlots);
  unsigned v6 = 0;
  unsigned v3 = 0;
  for (unsigned k = 0; k < 6; ++k) v6 |= static_cast<unsigned>(nonce.bits[off + k]) << k;
  for (unsigned k = 0; k < 3; ++k) v3 |= static_cast<unsigned>(nonce.bits[off + 6 + k]) << k;
  return {128 + v6, 8 + 2 * v3};
}

}  // namespace sirf
