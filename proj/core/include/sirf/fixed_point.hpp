// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>

namespace sirf {

/// Signed soft-data value with 4 fractional bits (value = raw / 16).
///
/// Every sponge operation (differencing, TCC reduction, reflection, SF
/// accumulation) stays on this lattice exactly as long as TCC is an even
/// integer, so no rounding happens after the GPEV rescale.
class Fixed4 {
 public:
  static constexpr int kFracBits = 4;
  static constexpr std::int32_t kScale = 1 << kFracBits;

  constexpr Fixed4() = default;

  static constexpr Fixed4 from_raw(std::int32_t raw) { return Fixed4(raw); }
  static constexpr Fixed4 from_int(std::int32_t v) { return Fixed4(v * kScale); }

  constexpr std::int32_t raw() const { return raw_; }
  constexpr double to_double() const { return static_cast<double>(raw_) / kScale; }

  constexpr Fixed4 operator-() const { return Fixed4(-raw_); }
  constexpr Fixed4 operator+(Fixed4 o) const { return Fixed4(raw_ + o.raw_); }
  constexpr Fixed4 operator-(Fixed4 o) const { return Fixed4(raw_ - o.raw_); }
  constexpr Fixed4& operator+=(Fixed4 o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr Fixed4& operator-=(Fixed4 o) {
    raw_ -= o.raw_;
    return *this;
  }

  constexpr auto operator<=>(const Fixed4&) const = default;

 private:
  constexpr explicit Fixed4(std::int32_t raw) : raw_(raw) {}
  std::int32_t raw_ = 0;
};

/// num / den rounded half away from zero. den must be positive.
constexpr std::int64_t div_round_half_away(std::int64_t num, std::int64_t den) {
  const std::int64_t mag = num < 0 ? -num : num;
  const std::int64_t q = (2 * mag + den) / (2 * den);
  return num < 0 ? -q : q;
}

}  // namespace sirf
