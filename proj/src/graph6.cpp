// Copyright 2026 The trifree Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trifree/graph6.hpp"

#include <cstdint>
#include <fstream>

namespace trifree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const uint64_t n = static_cast<uint64_t>(g.num_vertices());
  std::string out;
  append_size(out, n);
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view code) {
  size_t pos = 0;
  if (code.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (!code.empty() && code.back() == '\n') code.remove_suffix(1);
  if (!code.empty() && code.back() == '\r') code.remove_suffix(1);

  auto take = [&](size_t at) -> int {
    if (at >= code.size()) throw Graph6Error("unexpected end of input", at);
    const int c = static_cast<unsigned char>(code[at]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside 63..126", at);
    return c - 63;
  };

  uint64_t n = 0;
  int first = take(pos);
  if (first < 63) {
    n = static_cast<uint64_t>(first);
    pos += 1;
  } else if (pos + 1 < code.size() && take(pos + 1) == 63) {
    for (size_t k = 0; k < 6; ++k) {
      n = (n << 6) | static_cast<uint64_t>(take(pos + 2 + k));
    }
    pos += 8;
  } else {
    for (size_t k = 0; k < 3; ++k) {
      n = (n << 6) | static_cast<uint64_t>(take(pos + 1 + k));
    }
    pos += 4;
  }
  if (n > static_cast<uint64_t>(1) << 20) {
    throw Graph6Error("vertex count too large for this decoder", pos);
  }

  const uint64_t pair_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const size_t body_bytes = static_cast<size_t>((pair_count + 5) / 6);
  if (code.size() - pos < body_bytes) {
    throw Graph6Error("truncated edge data", code.size());
  }
  if (code.size() - pos > body_bytes) {
    throw Graph6Error("trailing bytes after edge data", pos + body_bytes);
  }

  Graph g(static_cast<int>(n));
  uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const size_t at = pos + static_cast<size_t>(k / 6);
      const int word = take(at);
      if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (pair_count % 6 != 0) {
    const size_t at = pos + body_bytes - 1;
    const int pad = 6 - static_cast<int>(pair_count % 6);
    if ((take(at) & ((1 << pad) - 1)) != 0) {
      throw Graph6Error("non-zero padding bits", at);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_graph6(g) << '\n';
}

}  // namespace trifree
