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

#ifndef TRIFREE_GRAPH6_HPP_
#define TRIFREE_GRAPH6_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trifree/graph.hpp"

namespace trifree {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Standard graph6 encoding, without the optional ">>graph6<<" header and
// without a trailing newline. Sizes up to 2^36-1 use the multi-byte prefix.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and one trailing newline.
Graph from_graph6(std::string_view code);

// One graph per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const Graph& g);

}  // namespace trifree

#endif  // TRIFREE_GRAPH6_HPP_
