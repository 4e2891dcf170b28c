// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sirf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Device geometry cannot be realized (zero counts, or the challenge word
/// has too few bits to address every stage).
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

/// The DVD distribution collapsed to a single value, so GPEV has no range to
/// normalize by. Signals a dead entropy source.
class DegenerateRange : public Error {
 public:
  explicit DegenerateRange(unsigned iteration)
      : Error("degenerate DVD range at iteration " + std::to_string(iteration)),
        iteration_(iteration) {}
  unsigned iteration() const noexcept { return iteration_; }

 private:
  unsigned iteration_;
};

/// Pearson correlation is undefined because one input is constant.
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

/// A statistical procedure was handed fewer bits than it needs.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sirf
