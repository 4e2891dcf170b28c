// SPDX-License-Identifier: Apache-2.0
#include "sirf/bit_sequence.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>

#include "sirf/errors.hpp"

namespace sirf {

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) {
    throw std::invalid_argument("BitSequence::from_bytes: nbits exceeds buffer");
  }
  BitSequence s;
  s.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((nbits + 7) / 8));
  s.size_ = nbits;
  if (nbits & 7) {
    s.bytes_.back() &= static_cast<std::uint8_t>(0xFF00U >> (nbits & 7));
  }
  return s;
}

BitSequence BitSequence::from_unpacked(std::span<const std::uint8_t> bits) {
  BitSequence s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s.set(i, true);
  }
  return s;
}

void BitSequence::append(const BitSequence& other) {
  if ((size_ & 7) == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  reserve(size_ + other.size_);
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other[i]);
}

BitSequence BitSequence::slice(std::size_t first, std::size_t count) const {
  if (first + count > size_) throw std::out_of_range("BitSequence::slice");
  if ((first & 7) == 0) {
    return from_bytes(std::span(bytes_).subspan(first / 8), count);
  }
  BitSequence s(count);
  for (std::size_t i = 0; i < count; ++i) {
    if ((*this)[first + i]) s.set(i, true);
  }
  return s;
}

std::vector<std::uint8_t> BitSequence::unpack() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = (*this)[i];
  return out;
}

std::size_t BitSequence::count_ones() const {
  std::size_t n = 0;
  for (auto b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
  return n;  // tail bits are kept zero
}

double hamming_fraction(const BitSequence& a, const BitSequence& b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n == 0) return 0.0;
  std::size_t diff = 0;
  const auto ab = a.bytes();
  const auto bb = b.bytes();
  const std::size_t full = n / 8;
  for (std::size_t i = 0; i < full; ++i) {
    diff += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(ab[i] ^ bb[i])));
  }
  for (std::size_t i = full * 8; i < n; ++i) diff += a[i] != b[i];
  return static_cast<double>(diff) / static_cast<double>(n);
}

BitSequence read_bit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  return BitSequence::from_bytes(buf);
}

void write_bit_file(const std::string& path, const BitSequence& bits) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  const auto b = bits.bytes();
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sirf
