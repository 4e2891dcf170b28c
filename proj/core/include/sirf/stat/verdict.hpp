// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sirf::stat {

struct TestVerdict {
  std::string name;
  /// Named statistic values; the first entry is the headline statistic.
  std::vector<std::pair<std::string, double>> values;
  std::string threshold;  // human-readable pass relation
  bool pass = false;
  bool insufficient_data = false;

  double statistic() const { return values.empty() ? 0.0 : values.front().second; }
};

inline TestVerdict insufficient(std::string name, std::string threshold) {
  TestVerdict v;
  v.name = std::move(name);
  v.threshold = std::move(threshold);
  v.insufficient_data = true;
  return v;
}

}  // namespace sirf::stat
