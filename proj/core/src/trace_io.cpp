// SPDX-License-Identifier: Apache-2.0
#include "sirf/trace_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>

#include "sirf/errors.hpp"

namespace sirf {

namespace {

void put_le(std::uint8_t* p, std::uint32_t v, int n) {
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint32_t get_le(const std::uint8_t* p, int n) {
  std::uint32_t v = 0;
  for (int i = 0; i < n; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_trace_record(std::ostream& out, const IterationTrace& t) {
  std::array<std::uint8_t, kTraceRecordBytes> buf;
  put_le(buf.data(), t.iteration, 4);
  put_le(buf.data() + 4, t.params.rc, 2);
  put_le(buf.data() + 6, t.params.tcc, 2);
  for (std::size_t i = 0; i < kSetSize; ++i) {
    put_le(buf.data() + 8 + 4 * i, static_cast<std::uint32_t>(t.dvd_cs[i].raw()), 4);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("trace write failed");
}

bool read_trace_record(std::istream& in, TraceRecord& rec) {
  std::array<std::uint8_t, kTraceRecordBytes> buf;
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  const auto got = in.gcount();
  if (got == 0) return false;
  if (got != static_cast<std::streamsize>(buf.size())) throw IoError("truncated trace record");
  rec.iteration = get_le(buf.data(), 4);
  rec.params.rc = get_le(buf.data() + 4, 2);
  rec.params.tcc = get_le(buf.data() + 6, 2);
  rec.raw.resize(kSetSize);
  for (std::size_t i = 0; i < kSetSize; ++i) {
    rec.raw[i] = static_cast<std::int32_t>(get_le(buf.data() + 8 + 4 * i, 4));
  }
  return true;
}

std::vector<TraceRecord> read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<TraceRecord> out;
  TraceRecord r;
  while (read_trace_record(in, r)) out.push_back(r);
  return out;
}

}  // namespace sirf
