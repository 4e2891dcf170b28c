// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sirf {

/// Packed bit array, MSB-first within each byte: bit i lives in
/// byte i / 8 at position 7 - (i % 8). This is the raw-bit file format.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::size_t nbits) : bytes_((nbits + 7) / 8, 0), size_(nbits) {}

  static BitSequence from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  static BitSequence from_bytes(std::span<const std::uint8_t> bytes) {
    return from_bytes(bytes, bytes.size() * 8);
  }
  /// One bit per element; any nonzero element is a 1.
  static BitSequence from_unpacked(std::span<const std::uint8_t> bits);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator[](std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1U; }
  void set(std::size_t i, bool v) {
    const std::uint8_t mask = static_cast<std::uint8_t>(0x80U >> (i & 7));
    if (v) {
      bytes_[i >> 3] |= mask;
    } else {
      bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
  }
  void push_back(bool v) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    ++size_;
    set(size_ - 1, v);
  }
  void append(const BitSequence& other);
  void reserve(std::size_t nbits) { bytes_.reserve((nbits + 7) / 8); }

  /// Copy of bits [first, first + count).
  BitSequence slice(std::size_t first, std::size_t count) const;
  /// One byte (0 or 1) per bit; the form the statistical tests iterate over.
  std::vector<std::uint8_t> unpack() const;
  std::size_t count_ones() const;

  std::span<const std::uint8_t> bytes() const { return bytes_; }

  bool operator==(const BitSequence&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

/// Fraction of positions where a and b differ, over the shorter length.
double hamming_fraction(const BitSequence& a, const BitSequence& b);

BitSequence read_bit_file(const std::string& path);
void write_bit_file(const std::string& path, const BitSequence& bits);

}  // namespace sirf
