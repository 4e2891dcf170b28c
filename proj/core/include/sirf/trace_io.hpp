// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sirf/sponge_core.hpp"

namespace sirf {

/// Binary DVD_cs trace. Each record, little-endian:
///   uint32 iteration, uint16 rc, uint16 tcc, 2048 x int32 raw F=4 values.
struct TraceRecord {
  std::uint32_t iteration = 0;
  IterationParams params;
  std::vector<std::int32_t> raw;  // 2048 values

  bool operator==(const TraceRecord&) const = default;
};

inline constexpr std::size_t kTraceRecordBytes = 4 + 2 + 2 + 4 * kSetSize;

void write_trace_record(std::ostream& out, const IterationTrace& t);
/// Returns false on clean end of stream; throws IoError on a truncated record.
bool read_trace_record(std::istream& in, TraceRecord& rec);
std::vector<TraceRecord> read_trace_file(const std::string& path);

}  // namespace sirf
