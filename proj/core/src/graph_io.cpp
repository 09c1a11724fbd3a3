/*
 * Copyright 2026 The ccdist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccdist/graph_io.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>
#include <string>

namespace ccdist {

namespace {

void put_le(std::vector<std::byte>& out, std::uint64_t value, unsigned width) {
  for (unsigned i = 0; i < width; ++i) out.push_back(static_cast<std::byte>((value >> (8 * i)) & 0xff));
}

class Reader {
 public:
  explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  std::uint64_t le(unsigned width, const char* what) {
    if (bytes_.size() - pos_ < width) throw CodecError(std::string("ccfb truncated in ") + what);
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i)
      value |= std::to_integer<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += width;
    return value;
  }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

unsigned ccfb_neighbor_width(std::size_t n) noexcept {
  return static_cast<std::uint64_t>(n) < (std::uint64_t{1} << 32) ? 4u : 8u;
}

std::vector<std::byte> encode_ccfb(const Graph& graph) {
  const auto n = graph.vertex_count();
  const auto m = graph.edge_count();
  const auto w = ccfb_neighbor_width(n);
  std::vector<std::byte> out;
  out.reserve(24 + 8 * (n + 1) + w * m);
  for (const char c : {'C', 'C', 'F', 'B'}) out.push_back(static_cast<std::byte>(c));
  put_le(out, kCcfbVersion, 4);
  put_le(out, n, 8);
  put_le(out, m, 8);
  for (const auto off : graph.offsets()) put_le(out, off, 8);
  for (const auto v : graph.neighbor_array()) put_le(out, v, w);
  return out;
}

Graph decode_ccfb(std::span<const std::byte> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), "CCFB", 4) != 0)
    throw CodecError("ccfb: bad magic");
  Reader r(bytes.subspan(4));
  const auto version = r.le(4, "version");
  if (version != kCcfbVersion) throw CodecError("ccfb: unsupported version " + std::to_string(version));
  const auto n = r.le(8, "header");
  const auto m = r.le(8, "header");
  const auto w = ccfb_neighbor_width(n);
  // Size check before allocating anything proportional to n or m.
  const auto rem = r.remaining();
  if (n >= rem / 8 || m > (rem - 8 * (n + 1)) / w)
    throw CodecError("ccfb truncated: header promises more data than present");
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = r.le(8, "offsets");
  std::vector<VertexId> neighbors(m);
  for (auto& v : neighbors) v = r.le(w, "neighbors");
  if (r.remaining() != 0) throw CodecError("ccfb: trailing bytes after neighbors");
  try {
    return Graph(std::move(offsets), std::move(neighbors));
  } catch (const Error& e) {
    throw CodecError(std::string("ccfb: ") + e.what());
  }
}

void write_edge_list(std::ostream& out, const EdgeList& edges) {
  out << "# n " << edges.n << '\n';
  for (const auto& e : edges.edges) out << e.u << ' ' << e.v << '\n';
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".ccfb" ? GraphFormat::Ccfb : GraphFormat::EdgeList;
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  if (format == GraphFormat::EdgeList) return build_csr(load_edge_list(in));
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_ccfb(std::as_bytes(std::span(raw)));
}

void write_graph(const std::filesystem::path& path, const EdgeList& edges, GraphFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  if (format == GraphFormat::EdgeList) {
    write_edge_list(out, edges);
  } else {
    const auto bytes = encode_ccfb(build_csr(edges));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace ccdist
